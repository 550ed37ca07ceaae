#pragma once

// JSON and DOT serialization for graphs, annotated graphs and Latin squares.
//
// Graph JSON: {"n": int, "edges": [[u,v], ...], "labels": {role: [vertices]}}.
// Annotated graphs add "family", "params" and, for the tree-and-path
// constructions, "base" (a plain graph) and "orientation" ([[tail, head], ...]).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "surround/families.hpp"
#include "surround/latin.hpp"

namespace surround {

using json = nlohmann::json;

inline json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.order();
  j["edges"] = json::array();
  for (auto e : g.edges()) j["edges"].push_back({e.u, e.v});
  return j;
}

inline Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges")) throw GraphError("graph JSON needs \"n\" and \"edges\"");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw GraphError("graph JSON: each edge must be a pair");
    auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0) throw GraphError("graph JSON: negative vertex");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  auto n = j.at("n").get<std::int64_t>();
  if (n < 0) throw GraphError("graph JSON: negative vertex count");
  return Graph::build(static_cast<std::size_t>(n), edges);
}

inline json annotated_to_json(const AnnotatedGraph& ag) {
  json j = graph_to_json(ag.graph);
  j["family"] = ag.family;
  j["labels"] = json::object();
  for (const auto& [k, v] : ag.labels) j["labels"][k] = v;
  j["params"] = json::object();
  for (const auto& [k, v] : ag.params) j["params"][k] = v;
  if (ag.base) j["base"] = graph_to_json(*ag.base);
  if (ag.orientation) {
    j["orientation"] = json::array();
    for (auto [t, h] : ag.orientation->arcs) j["orientation"].push_back({t, h});
  }
  return j;
}

inline AnnotatedGraph annotated_from_json(const json& j) {
  AnnotatedGraph ag;
  ag.graph = graph_from_json(j);
  ag.family = j.value("family", std::string("graph"));
  if (j.contains("labels"))
    for (const auto& [k, v] : j.at("labels").items()) {
      auto& dst = ag.labels[k];
      for (const auto& x : v) {
        auto idx = x.get<std::int64_t>();
        if (idx < 0 || static_cast<std::size_t>(idx) >= ag.graph.order())
          throw GraphError("graph JSON: label '" + k + "' names a vertex out of range");
        dst.push_back(static_cast<Vertex>(idx));
      }
    }
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) ag.params[k] = v.get<std::int64_t>();
  if (j.contains("base")) ag.base = graph_from_json(j.at("base"));
  if (j.contains("orientation")) {
    Orientation o;
    for (const auto& a : j.at("orientation")) o.arcs.emplace_back(a[0].get<Vertex>(), a[1].get<Vertex>());
    ag.orientation = std::move(o);
  }
  return ag;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline AnnotatedGraph load_annotated(const std::string& path) { return annotated_from_json(read_json_file(path)); }

// Undirected DOT; vertices carrying a single-vertex label get it as a tooltip.
inline std::string to_dot(const AnnotatedGraph& ag) {
  std::ostringstream os;
  os << "graph \"" << ag.family << "\" {\n";
  std::map<Vertex, std::string> names;
  for (const auto& [k, v] : ag.labels)
    if (v.size() == 1) names[v.front()] += (names[v.front()].empty() ? "" : " ") + k;
  for (Vertex v = 0; v < ag.graph.order(); ++v) {
    os << "  " << v;
    if (names.count(v)) os << " [tooltip=\"" << names[v] << "\"]";
    os << ";\n";
  }
  for (auto e : ag.graph.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Graph& g) { return to_dot(plain_graph(g)); }

// Minimal reader for the DOT subset produced by to_dot: "a -- b;" lines and
// bare vertex statements.
inline Graph graph_from_dot(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    auto pos = line.find("--");
    std::istringstream ls(line);
    if (pos != std::string::npos) {
      long a = std::stol(line.substr(0, pos));
      long b = std::stol(line.substr(pos + 2));
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(a, b)) + 1);
    } else {
      long v;
      if (ls >> v) n = std::max<std::size_t>(n, static_cast<std::size_t>(v) + 1);
    }
  }
  return Graph::build(n, edges);
}

inline json square_to_json(const LatinSquare& sq) { return sq.grid; }

}  // namespace surround
