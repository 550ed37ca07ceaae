#pragma once

// Cross-variant inequality suite: the restrictive-vs-free inequalities, the
// trivial degree lower bounds and the six simulation upper bounds, checked on
// exact cop numbers over a corpus of small connected graphs.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "surround/graph.hpp"
#include "surround/solver.hpp"

namespace surround {

struct CorpusGraph {
  std::string id;
  Graph graph;
};

// All connected graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto slot_of = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    // Row-major index of (u, v) among pairs u < v.
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  };
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::uint64_t canon = mask;
    for (const auto& q : perms) {
      std::uint64_t img = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) img |= std::uint64_t{1} << slot_of(q[slots[s].first], q[slots[s].second]);
      canon = std::min(canon, img);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (canon >> s & 1) edges.push_back(slots[s]);
    auto g = Graph::build(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// Connected graphs with 2..max_n vertices up to isomorphism. The one-vertex
// graph is left out: it has no edges for edge cops to stand on.
inline std::vector<CorpusGraph> connected_corpus(std::size_t max_n) {
  std::vector<CorpusGraph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto gs = connected_graphs(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      out.push_back({"conn-n" + std::to_string(n) + "-" + std::to_string(i), std::move(gs[i])});
  }
  return out;
}

// Random connected graphs: a random spanning tree plus every other pair with
// probability p. Orders are uniform in [min_n, max_n].
inline std::vector<CorpusGraph> random_connected_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                                       std::uint64_t seed, double p = 0.3) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::pair<Vertex, Vertex>> edges;
    auto add = [&](Vertex u, Vertex v) { edges.insert({std::min(u, v), std::max(u, v)}); };
    for (std::size_t j = 1; j < n; ++j) add(order[j], order[std::uniform_int_distribution<std::size_t>(0, j - 1)(rng)]);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!edges.count({u, v}) && coin(rng)) add(u, v);
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    out.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(i), Graph::build(n, list)});
  }
  return out;
}

struct BoundViolation {
  std::string bound;   // e.g. "c_V <= Delta * c_Vr"
  std::string detail;  // the numbers involved
};

struct GraphBounds {
  std::string id;
  std::size_t n = 0, m = 0;
  LowerBounds lower;
  bool skipped = false;
  std::string skip_reason;
  // Exact cop numbers, indexed like kAllVariants.
  std::array<std::size_t, 5> c{};
  std::array<CopNumberReport, 5> reports;
  std::vector<BoundViolation> violations;
  std::size_t checks = 0;
  double seconds = 0;
};

struct InequalityReport {
  std::vector<GraphBounds> graphs;
  std::size_t checked = 0, skipped = 0, violations = 0, checks = 0;
};

namespace detail {
inline std::size_t variant_slot(Variant v) {
  return static_cast<std::size_t>(std::find(kAllVariants.begin(), kAllVariants.end(), v) - kAllVariants.begin());
}
}  // namespace detail

// Evaluates every inequality on one graph's cop numbers.
inline void check_bounds(GraphBounds& gb) {
  auto c = [&](Variant v) { return gb.c[detail::variant_slot(v)]; };
  const std::size_t D = gb.lower.Delta, d = gb.lower.degeneracy;
  const std::size_t cV = c(Variant::VertexSurround), cVr = c(Variant::VertexSurroundRestrictive);
  const std::size_t cE = c(Variant::EdgeSurround), cEr = c(Variant::EdgeSurroundRestrictive);
  auto check = [&](bool ok, std::string bound, std::string detail) {
    ++gb.checks;
    if (!ok) gb.violations.push_back({std::move(bound), std::move(detail)});
  };
  auto s = [](std::size_t x) { return std::to_string(x); };
  check(cVr <= cV, "c_Vr <= c_V", s(cVr) + " vs " + s(cV));
  check(cEr <= cE, "c_Er <= c_E", s(cEr) + " vs " + s(cE));
  check(cVr >= d, "c_Vr >= degeneracy", s(cVr) + " vs " + s(d));
  check(cV >= D, "c_V >= Delta", s(cV) + " vs " + s(D));
  check(cE >= D, "c_E >= Delta", s(cE) + " vs " + s(D));
  check(cEr >= D, "c_Er >= Delta", s(cEr) + " vs " + s(D));
  check(cV <= D * cVr, "c_V <= Delta * c_Vr", s(cV) + " vs " + s(D) + "*" + s(cVr));
  check(cE <= D * cEr, "c_E <= Delta * c_Er", s(cE) + " vs " + s(D) + "*" + s(cEr));
  check(cV <= 2 * cE, "c_V <= 2 * c_E", s(cV) + " vs 2*" + s(cE));
  check(cVr <= 2 * cEr, "c_Vr <= 2 * c_Er", s(cVr) + " vs 2*" + s(cEr));
  check(cE <= D * cV, "c_E <= Delta * c_V", s(cE) + " vs " + s(D) + "*" + s(cV));
  check(cEr <= D * cVr, "c_Er <= Delta * c_Vr", s(cEr) + " vs " + s(D) + "*" + s(cVr));
}

using BoundsProgress = std::function<void(const GraphBounds&)>;

inline GraphBounds bounds_for_graph(const CorpusGraph& cg, const SolveOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  GraphBounds gb;
  gb.id = cg.id;
  gb.n = cg.graph.order();
  gb.m = cg.graph.size();
  gb.lower = lower_bounds(cg.graph);
  CopNumberOptions co;
  co.solve = opts;
  for (std::size_t i = 0; i < kAllVariants.size(); ++i) {
    gb.reports[i] = cop_number(cg.graph, kAllVariants[i], co, cg.id);
    if (!gb.reports[i].k_star) {
      gb.skipped = true;
      gb.skip_reason = "budget exhausted for " + std::string(variant_name(kAllVariants[i]));
      break;
    }
    gb.c[i] = *gb.reports[i].k_star;
  }
  if (!gb.skipped) check_bounds(gb);
  gb.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return gb;
}

inline InequalityReport verify_inequality_suite(const std::vector<CorpusGraph>& corpus, const SolveOptions& opts = {},
                                                const BoundsProgress& progress = {}) {
  InequalityReport rep;
  for (const auto& cg : corpus) {
    if (!is_connected(cg.graph)) throw RuleError("inequality suite: graph " + cg.id + " is not connected");
    if (cg.graph.size() == 0) throw RuleError("inequality suite: graph " + cg.id + " has no edges");
    auto gb = bounds_for_graph(cg, opts);
    if (gb.skipped) {
      ++rep.skipped;
    } else {
      ++rep.checked;
      rep.checks += gb.checks;
      rep.violations += gb.violations.size();
    }
    if (progress) progress(gb);
    rep.graphs.push_back(std::move(gb));
  }
  return rep;
}

inline nlohmann::json verdicts_to_json(const CopNumberReport& r) {
  auto out = nlohmann::json::array();
  for (const auto& kv : r.verdicts)
    out.push_back({{"k", kv.k},
                   {"verdict", kv.verdict ? nlohmann::json(std::string(verdict_name(*kv.verdict))) : nlohmann::json("budget")},
                   {"states", kv.stats.states},
                   {"placement", kv.placement}});
  return out;
}

inline nlohmann::json graph_bounds_to_json(const GraphBounds& gb, bool with_certificates) {
  nlohmann::json j{{"id", gb.id},
                   {"n", gb.n},
                   {"m", gb.m},
                   {"lower_bounds", {{"delta", gb.lower.delta}, {"Delta", gb.lower.Delta}, {"degeneracy", gb.lower.degeneracy}}},
                   {"skipped", gb.skipped}};
  if (gb.skipped) j["skip_reason"] = gb.skip_reason;
  nlohmann::json cn = nlohmann::json::object();
  for (std::size_t i = 0; i < kAllVariants.size(); ++i)
    if (gb.reports[i].k_star) cn[std::string(variant_name(kAllVariants[i]))] = gb.c[i];
  j["cop_numbers"] = cn;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : gb.violations) j["violations"].push_back({{"bound", v.bound}, {"detail", v.detail}});
  if (with_certificates || !gb.violations.empty()) {
    nlohmann::json cert = nlohmann::json::object();
    for (std::size_t i = 0; i < kAllVariants.size(); ++i)
      cert[std::string(variant_name(kAllVariants[i]))] = verdicts_to_json(gb.reports[i]);
    j["certificates"] = cert;
  }
  return j;
}

}  // namespace surround
