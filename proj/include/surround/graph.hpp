#pragma once

// Immutable simple undirected graphs and the structural algorithms the game
// solver and the family constructors rely on.
//
// Vertices and edges are dense indices. Edge i keeps its index across
// serialization, and every per-vertex list is sorted ascending.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surround {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  // Validates and builds. Endpoints of each edge are stored as (min, max);
  // edge i of the result is pair i of the input.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    std::vector<std::pair<Vertex, Vertex>> seen;
    seen.reserve(edges.size());
    for (auto [a, b] : edges) {
      auto pair_text = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (a >= n || b >= n) throw GraphError("vertex out of range in edge " + pair_text);
      if (a == b) throw GraphError("loop at edge " + pair_text);
      Edge e{std::min(a, b), std::max(a, b)};
      g.edges_.push_back(e);
      seen.emplace_back(e.u, e.v);
    }
    std::vector<std::size_t> order(seen.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return seen[x] < seen[y]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (seen[order[i]] == seen[order[i - 1]]) {
        auto [a, b] = seen[order[i]];
        throw GraphError("parallel edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
    g.index();
    return g;
  }

  static Graph build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<std::pair<Vertex, Vertex>> v(edges);
    return build(n, std::span<const std::pair<Vertex, Vertex>>(v));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  // incident_edges(v)[i] joins v and neighbors(v)[i].
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {inc_.data() + offset_[v], inc_.data() + offset_[v + 1]};
  }
  // Edges sharing an endpoint with e, ascending, e excluded.
  std::span<const EdgeId> adjacent_edges(EdgeId e) const {
    return {eadj_.data() + eoffset_[e], eadj_.data() + eoffset_[e + 1]};
  }

  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const {
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
  }
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (auto e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index() {
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> lists(n_);
    for (EdgeId i = 0; i < edges_.size(); ++i) {
      lists[edges_[i].u].emplace_back(edges_[i].v, i);
      lists[edges_[i].v].emplace_back(edges_[i].u, i);
    }
    offset_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(lists[v].begin(), lists[v].end());
      offset_[v + 1] = offset_[v] + lists[v].size();
      for (auto [w, e] : lists[v]) {
        adj_.push_back(w);
        inc_.push_back(e);
      }
    }
    eoffset_.assign(edges_.size() + 1, 0);
    for (EdgeId i = 0; i < edges_.size(); ++i) {
      std::vector<EdgeId> near;
      for (Vertex x : {edges_[i].u, edges_[i].v})
        for (EdgeId f : incident_edges(x))
          if (f != i) near.push_back(f);
      std::sort(near.begin(), near.end());
      near.erase(std::unique(near.begin(), near.end()), near.end());
      eadj_.insert(eadj_.end(), near.begin(), near.end());
      eoffset_[i + 1] = eadj_.size();
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> inc_;
  std::vector<std::size_t> eoffset_{0};
  std::vector<EdgeId> eadj_;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  return Graph::build(n, edges);
}

// BFS distances; unreachable vertices get kUnreachable.
inline std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  if (source >= g.order()) throw GraphError("distances_from: vertex out of range");
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Multi-source BFS: distance to the nearest source.
inline std::vector<std::size_t> distances_from_set(const Graph& g, std::span<const Vertex> sources) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (s >= g.order()) throw GraphError("distances_from_set: vertex out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  std::vector<std::size_t> per_vertex;
};

inline DegreeStats degrees(const Graph& g) {
  DegreeStats s;
  s.per_vertex.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.per_vertex[v] = g.degree(v);
  if (!s.per_vertex.empty()) {
    auto [lo, hi] = std::minmax_element(s.per_vertex.begin(), s.per_vertex.end());
    s.min = *lo;
    s.max = *hi;
  }
  return s;
}

inline std::size_t max_degree(const Graph& g) { return degrees(g).max; }
inline std::size_t min_degree(const Graph& g) { return degrees(g).min; }

// Shortest cycle length, nullopt for forests. BFS from every vertex; a non-tree
// edge (x,y) closes a walk of length d(x)+d(y)+1 that contains a cycle at least
// that short, and the minimum over all roots is attained by a true cycle.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = kUnreachable;
  std::vector<std::size_t> dist(g.order());
  std::vector<EdgeId> via(g.order());
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, root);
    dist[root] = 0;
    via[root] = std::numeric_limits<EdgeId>::max();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      auto nb = g.neighbors(x);
      auto inc = g.incident_edges(x);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        Vertex y = nb[i];
        if (inc[i] == via[x]) continue;
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          via[y] = inc[i];
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnreachable) return std::nullopt;
  return best;
}

// Max over the removal order of the degree of the removed minimum-degree vertex.
inline std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::vector<std::size_t> deg(n);
  std::size_t maxd = 0;
  for (Vertex v = 0; v < n; ++v) maxd = std::max(maxd, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> bucket(maxd + 1);
  for (Vertex v = 0; v < n; ++v) bucket[deg[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::size_t result = 0;
  std::size_t cur = 0;
  for (std::size_t done = 0; done < n;) {
    cur = cur == 0 ? 0 : cur - 1;
    while (bucket[cur].empty()) ++cur;
    Vertex v = bucket[cur].back();
    bucket[cur].pop_back();
    if (removed[v] || deg[v] != cur) continue;
    removed[v] = true;
    ++done;
    result = std::max(result, cur);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        bucket[deg[w]].push_back(w);
      }
    }
  }
  return result;
}

// Vertex i of the result is edge i of g.
inline Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw GraphError("line_graph: graph has no edges");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    for (EdgeId f : g.adjacent_edges(e))
      if (e < f) out.emplace_back(e, f);
  return Graph::build(g.size(), out);
}

struct Orientation {
  // arcs[e] = (tail, head) for edge e.
  std::vector<std::pair<Vertex, Vertex>> arcs;

  std::vector<std::size_t> out_degrees(std::size_t n) const {
    std::vector<std::size_t> d(n, 0);
    for (auto [t, h] : arcs) ++d[t];
    return d;
  }
  std::vector<std::size_t> in_degrees(std::size_t n) const {
    std::vector<std::size_t> d(n, 0);
    for (auto [t, h] : arcs) ++d[h];
    return d;
  }
  // Heads of arcs leaving v, ascending.
  std::vector<Vertex> out_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto [t, h] : arcs)
      if (t == v) out.push_back(h);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<Vertex> in_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto [t, h] : arcs)
      if (h == v) out.push_back(t);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Orients every edge along a Hierholzer circuit starting at vertex 0.
inline Orientation eulerian_orientation(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 != 0)
      throw GraphError("eulerian_orientation: odd degree at vertex " + std::to_string(v));
  if (!is_connected(g)) throw GraphError("eulerian_orientation: graph is disconnected");
  Orientation o;
  o.arcs.assign(g.size(), {0, 0});
  if (g.size() == 0) return o;
  std::vector<bool> used(g.size(), false);
  std::vector<std::size_t> next(g.order(), 0);
  // Stack of (vertex, edge used to arrive); popping emits the circuit in reverse.
  std::vector<std::pair<Vertex, EdgeId>> stack{{0, std::numeric_limits<EdgeId>::max()}};
  std::vector<std::pair<Vertex, EdgeId>> circuit;
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto inc = g.incident_edges(v);
    while (next[v] < inc.size() && used[inc[next[v]]]) ++next[v];
    if (next[v] == inc.size()) {
      circuit.emplace_back(v, via);
      stack.pop_back();
    } else {
      EdgeId e = inc[next[v]];
      used[e] = true;
      stack.emplace_back(g.edge(e).other(v), e);
    }
  }
  // circuit is reversed: circuit[i] was reached from circuit[i+1] via circuit[i].second.
  std::reverse(circuit.begin(), circuit.end());
  for (std::size_t i = 1; i < circuit.size(); ++i)
    o.arcs[circuit[i].second] = {circuit[i - 1].first, circuit[i].first};
  return o;
}

inline std::size_t diameter(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (auto x : distances_from(g, v)) d = std::max(d, x);
  return d;
}

}  // namespace surround
