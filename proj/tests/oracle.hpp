#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the solver or graph algorithms under test beyond Graph storage.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "surround/graph.hpp"
#include "surround/rules.hpp"

namespace oracle {

using surround::Graph;
using surround::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Floyd-Warshall; kInf for unreachable.
constexpr std::size_t kInf = 1u << 30;
inline std::vector<std::vector<std::size_t>> all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  auto a = adjacency(g);
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = i == j ? 0 : a[i][j] ? 1 : kInf;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

// Shortest cycle by removing each edge and measuring the detour.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  for (std::size_t skip = 0; skip < g.size(); ++skip) {
    std::vector<std::pair<Vertex, Vertex>> rest;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (i != skip) rest.emplace_back(g.edge(i).u, g.edge(i).v);
    auto d = all_pairs(Graph::build(g.order(), rest));
    auto e = g.edge(skip);
    if (d[e.u][e.v] < kInf) best = std::min(best.value_or(kInf), d[e.u][e.v] + 1);
  }
  return best;
}

// Max over all nonempty vertex subsets of the induced minimum degree.
inline std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  auto a = adjacency(g);
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t mn = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      std::size_t d = 0;
      for (std::size_t w = 0; w < n; ++w) d += (mask >> w & 1) && a[v][w];
      mn = std::min(mn, d);
    }
    best = std::max(best, mn);
  }
  return best;
}

// Reference game solver: states are ordered cop tuples (no multiset ranking),
// and the cop-win set is grown by naive repeated sweeps until nothing changes.
struct NaiveSolution {
  std::vector<std::vector<surround::Position>> tuples;  // ordered, all of them
  // win[side][tuple][robber]; side 0 = cops to move.
  std::vector<std::vector<std::vector<char>>> win;
  bool cops_win = false;
};

inline NaiveSolution naive_solve(const surround::GameSpec& spec) {
  using surround::Position;
  const Graph& g = spec.g();
  const bool edges = surround::on_edges(spec.variant);
  const std::size_t dom = edges ? g.size() : g.order();
  const std::size_t n = g.order(), k = spec.k;
  auto a = adjacency(g);

  auto step_ok = [&](Position x, Position y) {
    if (x == y) return true;
    if (!edges) return bool(a[x][y]);
    auto e = g.edge(x), f = g.edge(y);
    return e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
  };
  auto on = [&](const std::vector<Position>& c, Position p) { return std::find(c.begin(), c.end(), p) != c.end(); };
  auto edge_id = [&](Vertex u, Vertex v) -> Position {
    for (std::size_t i = 0; i < g.size(); ++i)
      if ((g.edge(i).u == u && g.edge(i).v == v) || (g.edge(i).u == v && g.edge(i).v == u)) return i;
    return ~Position{0};
  };
  auto surrounded = [&](const std::vector<Position>& c, Vertex r) {
    for (Vertex w = 0; w < n; ++w)
      if (a[r][w] && !on(c, edges ? edge_id(r, w) : w)) return false;
    return true;
  };
  auto robber_opts = [&](const std::vector<Position>& c, Vertex r) {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n; ++w) {
      if (w != r && !a[r][w]) continue;
      if (spec.variant == surround::Variant::VertexSurroundRestrictive && on(c, w)) continue;
      if (spec.variant == surround::Variant::EdgeSurroundRestrictive && w != r && on(c, edge_id(r, w))) continue;
      out.push_back(w);
    }
    return out;
  };

  std::vector<std::vector<Position>> tuples{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<Position>> next;
    for (const auto& t : tuples)
      for (Position p = 0; p < dom; ++p) {
        auto u = t;
        u.push_back(p);
        next.push_back(u);
      }
    tuples = next;
  }
  // Successor cop tuples: each cop stays or steps.
  std::vector<std::vector<std::size_t>> succ(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      bool ok = true;
      for (std::size_t c = 0; c < k && ok; ++c) ok = step_ok(tuples[i][c], tuples[j][c]);
      if (ok) succ[i].push_back(j);
    }

  const bool classical = spec.variant == surround::Variant::Classical;
  std::vector<std::vector<std::vector<char>>> win(2, std::vector<std::vector<char>>(tuples.size(), std::vector<char>(n, 0)));
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (Vertex r = 0; r < n; ++r) {
      if (classical && on(tuples[i], r)) win[0][i][r] = win[1][i][r] = 1;
      if (!classical && surrounded(tuples[i], r)) win[1][i][r] = 1;
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (Vertex r = 0; r < n; ++r) {
        if (!win[0][i][r])
          for (auto j : succ[i])
            if (win[1][j][r]) {
              win[0][i][r] = 1;
              changed = true;
              break;
            }
        if (!win[1][i][r]) {
          auto opts = robber_opts(tuples[i], r);
          bool all = true;
          for (auto w : opts) all = all && win[0][i][w];
          if (all) {
            win[1][i][r] = 1;
            changed = true;
          }
        }
      }
  }
  NaiveSolution out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    bool all = true;
    for (Vertex r = 0; r < n; ++r) {
      if (spec.variant == surround::Variant::VertexSurroundRestrictive && on(tuples[i], r)) continue;
      all = all && win[0][i][r];
    }
    out.cops_win = out.cops_win || all;
  }
  out.tuples = std::move(tuples);
  out.win = std::move(win);
  return out;
}

}  // namespace oracle
