#pragma once

// Move and win rules of the five game variants.
//
// Cops are a sorted multiset of positions (vertices, or edge ids in the edge
// variants); the robber always sits on a vertex. Surround is checked after the
// cops have moved, that is on robber-to-move states; classical capture counts
// on either side.

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surround/graph.hpp"
#include "surround/multiset.hpp"

namespace surround {

using Position = std::uint32_t;

enum class Variant { Classical, VertexSurround, VertexSurroundRestrictive, EdgeSurround, EdgeSurroundRestrictive };

inline constexpr std::array<Variant, 5> kAllVariants{Variant::Classical, Variant::VertexSurround,
                                                     Variant::VertexSurroundRestrictive, Variant::EdgeSurround,
                                                     Variant::EdgeSurroundRestrictive};

inline std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Classical: return "classical";
    case Variant::VertexSurround: return "vertex";
    case Variant::VertexSurroundRestrictive: return "vertex-r";
    case Variant::EdgeSurround: return "edge";
    case Variant::EdgeSurroundRestrictive: return "edge-r";
  }
  return "?";
}

inline Variant parse_variant(std::string_view s) {
  for (auto v : kAllVariants)
    if (variant_name(v) == s) return v;
  throw std::invalid_argument("unknown variant '" + std::string(s) +
                              "' (expected classical, vertex, vertex-r, edge, edge-r)");
}

inline bool on_edges(Variant v) { return v == Variant::EdgeSurround || v == Variant::EdgeSurroundRestrictive; }
inline bool is_restrictive(Variant v) {
  return v == Variant::VertexSurroundRestrictive || v == Variant::EdgeSurroundRestrictive;
}

enum class Side : std::uint8_t { Cops = 0, Robber = 1 };

struct Configuration {
  std::vector<Position> cops;  // sorted
  Vertex robber = 0;
  Side to_move = Side::Cops;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GameSpec {
  std::shared_ptr<const Graph> graph;
  Variant variant = Variant::Classical;
  std::size_t k = 1;

  GameSpec() = default;
  GameSpec(std::shared_ptr<const Graph> g, Variant v, std::size_t cops) : graph(std::move(g)), variant(v), k(cops) {
    if (!graph) throw RuleError("game spec: no graph");
    if (k < 1) throw RuleError("game spec: need at least one cop");
    if (graph->order() == 0) throw RuleError("game spec: empty graph");
    if (!is_connected(*graph)) throw RuleError("game spec: graph must be connected");
    if (on_edges(variant) && graph->size() == 0) throw RuleError("game spec: edge variant on a graph without edges");
  }
  GameSpec(const Graph& g, Variant v, std::size_t cops) : GameSpec(std::make_shared<const Graph>(g), v, cops) {}

  const Graph& g() const { return *graph; }
  std::size_t domain_size() const { return on_edges(variant) ? graph->size() : graph->order(); }
};

inline std::vector<Position> cop_position_domain(const GameSpec& spec) {
  std::vector<Position> out(spec.domain_size());
  for (Position p = 0; p < out.size(); ++p) out[p] = p;
  return out;
}

// Stay plus one step, ascending.
inline std::vector<Position> cop_moves_from(const GameSpec& spec, Position p) {
  if (p >= spec.domain_size()) throw RuleError("cop position " + std::to_string(p) + " outside the domain");
  std::vector<Position> out{p};
  if (on_edges(spec.variant)) {
    auto adj = spec.g().adjacent_edges(p);
    out.insert(out.end(), adj.begin(), adj.end());
  } else {
    auto nb = spec.g().neighbors(p);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool cop_move_legal(const GameSpec& spec, Position from, Position to) {
  if (from == to) return true;
  if (on_edges(spec.variant)) {
    auto adj = spec.g().adjacent_edges(from);
    return std::binary_search(adj.begin(), adj.end(), to);
  }
  return spec.g().adjacent(from, to);
}

inline bool holds(std::span<const Position> sorted_cops, Position p) {
  return std::binary_search(sorted_cops.begin(), sorted_cops.end(), p);
}

// Robber targets from r given the cops (sorted), ascending.
inline std::vector<Vertex> robber_moves(const GameSpec& spec, std::span<const Position> cops, Vertex r) {
  const Graph& g = spec.g();
  std::vector<Vertex> out;
  switch (spec.variant) {
    case Variant::VertexSurroundRestrictive:
      if (!holds(cops, r)) out.push_back(r);
      for (Vertex w : g.neighbors(r))
        if (!holds(cops, w)) out.push_back(w);
      break;
    case Variant::EdgeSurroundRestrictive: {
      out.push_back(r);
      auto nb = g.neighbors(r);
      auto inc = g.incident_edges(r);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (!holds(cops, inc[i])) out.push_back(nb[i]);
      break;
    }
    default:
      out.push_back(r);
      for (Vertex w : g.neighbors(r)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> robber_moves_from(const GameSpec& spec, const Configuration& c) {
  if (c.to_move != Side::Robber) throw RuleError("robber_moves_from: it is the cops' turn");
  return robber_moves(spec, c.cops, c.robber);
}

inline bool robber_move_legal(const GameSpec& spec, std::span<const Position> cops, Vertex from, Vertex to) {
  auto m = robber_moves(spec, cops, from);
  return std::binary_search(m.begin(), m.end(), to);
}

// All neighbors / incident edges of r carry a cop.
inline bool is_surrounded(const GameSpec& spec, std::span<const Position> cops, Vertex r) {
  const Graph& g = spec.g();
  if (on_edges(spec.variant)) {
    for (EdgeId e : g.incident_edges(r))
      if (!holds(cops, e)) return false;
    return true;
  }
  for (Vertex w : g.neighbors(r))
    if (!holds(cops, w)) return false;
  return true;
}

inline bool is_captured(const GameSpec& spec, std::span<const Position> cops, Vertex r) {
  return spec.variant == Variant::Classical && holds(cops, r);
}

// Win test for a state with the given side to move.
inline bool is_cop_win_state(const GameSpec& spec, std::span<const Position> cops, Vertex r, Side to_move) {
  if (spec.variant == Variant::Classical) return holds(cops, r);
  if (to_move != Side::Robber) return false;
  if (is_surrounded(spec, cops, r)) return true;
  // Restrictive vertex: a robber without legal moves has lost. Surround already
  // covers this; kept as an explicit check.
  return spec.variant == Variant::VertexSurroundRestrictive && robber_moves(spec, cops, r).empty();
}

inline bool is_cop_win_terminal(const GameSpec& spec, const Configuration& c) {
  return is_cop_win_state(spec, c.cops, c.robber, c.to_move);
}

inline std::uint64_t cop_placement_count(const GameSpec& spec) {
  MultisetCodec codec(spec.domain_size(), spec.k);
  return codec.count(spec.k);
}

// Legal robber starting vertices once the cops are placed; empty means the
// cops win by convention.
inline std::vector<Vertex> robber_placements(const GameSpec& spec, std::span<const Position> cops) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < spec.g().order(); ++v)
    if (spec.variant != Variant::VertexSurroundRestrictive || !holds(cops, v)) out.push_back(v);
  return out;
}

// Calls f(sorted cop multiset) for every canonical placement, in rank order.
template <class F>
void for_each_cop_placement(const GameSpec& spec, F&& f) {
  MultisetCodec codec(spec.domain_size(), spec.k);
  std::vector<std::uint32_t> buf(spec.k);
  for (std::uint64_t r = 0; r < codec.count(spec.k); ++r) {
    codec.unrank(r, spec.k, buf.data());
    f(std::span<const Position>(buf));
  }
}

// Whether `to` is reachable from `from` (both sorted, same size) by one joint
// cop move: a perfect matching in the "can step to" bipartite graph.
inline std::optional<std::vector<std::size_t>> match_joint_move(const GameSpec& spec, std::span<const Position> from,
                                                                std::span<const Position> to) {
  const std::size_t k = from.size();
  if (to.size() != k) return std::nullopt;
  std::vector<std::size_t> match_to(k, k);  // to-index -> from-index
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < k; ++j) {
      if (seen[j] || !cop_move_legal(spec, from[i], to[j])) continue;
      seen[j] = 1;
      if (match_to[j] == k || self(self, match_to[j])) {
        match_to[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    seen.assign(k, 0);
    if (!augment(augment, i)) return std::nullopt;
  }
  std::vector<std::size_t> dest(k);
  for (std::size_t j = 0; j < k; ++j) dest[match_to[j]] = j;
  return dest;  // from-index i moves to to[dest[i]]
}

inline bool joint_move_legal(const GameSpec& spec, std::span<const Position> from, std::span<const Position> to) {
  return match_joint_move(spec, from, to).has_value();
}

inline std::string position_text(const GameSpec& spec, Position p) {
  if (!on_edges(spec.variant)) return std::to_string(p);
  auto e = spec.g().edge(p);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

}  // namespace surround
