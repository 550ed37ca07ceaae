#pragma once

// Constructors for every graph family in the library, each with a fixed index
// layout and a role map that scripted strategies read.
//
// Role names are plain strings; multi-part names join their parts with ':'
// (for example "root:2:5" is the root of the tree for base vertex 5 in copy 2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surround/graph.hpp"
#include "surround/latin.hpp"

namespace surround {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AnnotatedGraph {
  std::string family;
  Graph graph;
  std::map<std::string, std::vector<Vertex>> labels;
  std::map<std::string, std::int64_t> params;
  // Base graph of the tree-and-path constructions and its orientation.
  std::optional<Graph> base;
  std::optional<Orientation> orientation;

  bool has(const std::string& role) const { return labels.count(role) != 0; }

  const std::vector<Vertex>& role(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw FamilyError("missing annotation '" + name + "' on " + family);
    return it->second;
  }
  Vertex vertex(const std::string& name) const {
    const auto& r = role(name);
    if (r.size() != 1) throw FamilyError("annotation '" + name + "' is not a single vertex");
    return r.front();
  }
  std::int64_t param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw FamilyError("missing parameter '" + name + "' on " + family);
    return it->second;
  }
};

template <class... Ts>
std::string role_key(const std::string& head, Ts... ids) {
  std::string out = head;
  ((out += ":" + std::to_string(ids)), ...);
  return out;
}

inline AnnotatedGraph plain_graph(Graph g, std::string family = "graph") {
  AnnotatedGraph ag;
  ag.family = std::move(family);
  ag.graph = std::move(g);
  return ag;
}

// A = 0..a-1, B = a..a+b-1.
inline AnnotatedGraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw FamilyError("complete_bipartite: class sizes must be at least 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
  AnnotatedGraph ag;
  ag.family = "k-bipartite";
  ag.graph = Graph::build(a + b, edges);
  for (Vertex i = 0; i < a + b; ++i) ag.labels[i < a ? "A" : "B"].push_back(i);
  ag.params = {{"a", static_cast<std::int64_t>(a)}, {"b", static_cast<std::int64_t>(b)}};
  return ag;
}

// Host vertices keep their indices; the leaves of host v are
// n_H + v*leaves .. n_H + (v+1)*leaves - 1.
inline AnnotatedGraph attach_leaves(const AnnotatedGraph& host, std::size_t leaves) {
  if (!is_connected(host.graph)) throw FamilyError("attach_leaves: host graph must be connected");
  const std::size_t nh = host.graph.order();
  auto edges = host.graph.edge_pairs();
  AnnotatedGraph ag;
  ag.family = "leafy(" + host.family + ")";
  ag.labels = host.labels;
  ag.params = host.params;
  ag.params["leaves"] = static_cast<std::int64_t>(leaves);
  ag.params["host_order"] = static_cast<std::int64_t>(nh);
  for (Vertex v = 0; v < nh; ++v) {
    ag.labels["host"].push_back(v);
    auto& own = ag.labels[role_key("leaves-of", v)];
    for (std::size_t t = 0; t < leaves; ++t) {
      auto w = static_cast<Vertex>(nh + v * leaves + t);
      edges.emplace_back(v, w);
      own.push_back(w);
    }
  }
  ag.graph = Graph::build(nh * (1 + leaves), edges);
  return ag;
}

// Positions i*k+j, rows k^2+i, parts k^2+k+(s-1)*k+n for square s and symbol n.
inline AnnotatedGraph mols_graph(std::size_t k) {
  auto mols = generate_mols(k);
  const std::size_t k2 = k * k;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto p = static_cast<Vertex>(i * k + j);
      edges.emplace_back(p, static_cast<Vertex>(k2 + i));
      for (std::size_t s = 1; s < k; ++s)
        edges.emplace_back(p, static_cast<Vertex>(k2 + k + (s - 1) * k + mols.squares[s - 1].at(i, j)));
    }
  AnnotatedGraph ag;
  ag.family = "mols-graph";
  ag.graph = Graph::build(2 * k2, edges);
  for (Vertex v = 0; v < 2 * k2; ++v)
    ag.labels[v < k2 ? "positions" : v < k2 + k ? "rows" : "parts"].push_back(v);
  ag.params = {{"k", static_cast<std::int64_t>(k)}};
  return ag;
}

// Vertex of pair {x,y}, x<y, 0-based, in lexicographic order.
inline AnnotatedGraph line_complete(std::size_t n) {
  if (n < 3) throw FamilyError("line_complete: n must be at least 3");
  std::vector<std::pair<Vertex, Vertex>> kn;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) kn.emplace_back(x, y);
  auto complete = Graph::build(n, kn);
  AnnotatedGraph ag;
  ag.family = "line-complete";
  ag.graph = line_graph(complete);
  for (Vertex i = 0; i < kn.size(); ++i) ag.labels[role_key("pair", kn[i].first, kn[i].second)] = {i};
  ag.params = {{"n", static_cast<std::int64_t>(n)}};
  return ag;
}

inline AnnotatedGraph base_graph(std::size_t s) {
  if (s < 1 || s > 4) throw FamilyError("base_graph: unsupported order 2^" + std::to_string(s));
  auto ag = mols_graph(std::size_t{1} << s);
  ag.family = "base";
  ag.orientation = eulerian_orientation(ag.graph);
  ag.params = {{"s", static_cast<std::int64_t>(s)}};
  return ag;
}

// Number of vertices of the base graph for parameter s.
inline std::size_t base_order(std::size_t s) { return 2 * (std::size_t{1} << s) * (std::size_t{1} << s); }

// ℓ > |V(base)| + m + s, the hypothesis of the two-cop capture strategy.
inline bool satisfies_lemma5_bounds(std::size_t s, std::size_t l, std::size_t m) {
  return s >= 1 && m >= 1 && l > base_order(s) + m + s;
}

// m > 2s+1 and ℓ > 3s+1, the hypothesis of the restrictive-vertex evasion strategy.
inline bool satisfies_lemma6_bounds(std::size_t s, std::size_t l, std::size_t m) {
  return s >= 1 && m > 2 * s + 1 && l > 3 * s + 1;
}

namespace detail {

// Layout of one tree-and-path copy. Tree nodes are heap-indexed: node 0 is the
// root, node 1 the root of the in-subtree, node 2 the root of the out-subtree;
// leaves are nodes 2^s-1 .. 2^(s+1)-2, in-subtree leaves first.
struct ExpansionShape {
  std::size_t s = 0;
  std::size_t l = 0;
  Graph base;
  Orientation orient;
  std::size_t tree_size = 0;
  // out_leaf[e] / in_leaf[e]: tree node of the tail / head leaf used by base edge e.
  std::vector<std::size_t> out_leaf, in_leaf;

  ExpansionShape(std::size_t s_, std::size_t l_) : s(s_), l(l_) {
    if (l < 1) throw FamilyError("expanded_graph: path parameter must be at least 1");
    auto b = base_graph(s);
    base = b.graph;
    orient = *b.orientation;
    tree_size = (std::size_t{2} << s) - 1;
    const std::size_t first_leaf = (std::size_t{1} << s) - 1;
    const std::size_t half = std::size_t{1} << (s - 1);
    out_leaf.assign(base.size(), 0);
    in_leaf.assign(base.size(), 0);
    for (Vertex a = 0; a < base.order(); ++a) {
      // Outgoing edges sorted by head, incoming by tail; neighbors(a) is sorted.
      std::size_t oi = 0, ii = 0;
      auto nb = base.neighbors(a);
      auto inc = base.incident_edges(a);
      for (std::size_t t = 0; t < nb.size(); ++t) {
        EdgeId e = inc[t];
        if (orient.arcs[e].first == a)
          out_leaf[e] = first_leaf + half + oi++;
        else
          in_leaf[e] = first_leaf + ii++;
      }
      if (oi != half || ii != half) throw FamilyError("expanded_graph: orientation is not balanced");
    }
  }

  Vertex tail(EdgeId e) const { return orient.arcs[e].first; }
  Vertex head(EdgeId e) const { return orient.arcs[e].second; }
};

}  // namespace detail

// Vertices: tree of base vertex a at a*(2^(s+1)-1) + node, then for each base
// edge e (tail->head) its 2ℓ inner path vertices, numbered from the tail side.
inline AnnotatedGraph expanded_graph(std::size_t s, std::size_t l) {
  detail::ExpansionShape sh(s, l);
  const std::size_t nb = sh.base.order();
  const std::size_t trees = nb * sh.tree_size;
  auto tree_v = [&](Vertex a, std::size_t node) { return static_cast<Vertex>(a * sh.tree_size + node); };
  auto path_v = [&](EdgeId e, std::size_t j) {  // j = 1..2l
    return static_cast<Vertex>(trees + e * 2 * l + (j - 1));
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  AnnotatedGraph ag;
  ag.family = "expanded";
  ag.params = {{"s", static_cast<std::int64_t>(s)}, {"l", static_cast<std::int64_t>(l)}};
  for (Vertex a = 0; a < nb; ++a) {
    for (std::size_t x = 0; 2 * x + 2 < sh.tree_size; ++x) {
      edges.emplace_back(tree_v(a, x), tree_v(a, 2 * x + 1));
      edges.emplace_back(tree_v(a, x), tree_v(a, 2 * x + 2));
    }
    ag.labels[role_key("root", a)] = {tree_v(a, 0)};
    ag.labels[role_key("in", a)] = {tree_v(a, 1)};
    ag.labels[role_key("out", a)] = {tree_v(a, 2)};
    auto& t = ag.labels[role_key("tree", a)];
    for (std::size_t x = 0; x < sh.tree_size; ++x) t.push_back(tree_v(a, x));
    ag.labels["roots"].push_back(tree_v(a, 0));
  }
  for (EdgeId e = 0; e < sh.base.size(); ++e) {
    Vertex a = sh.tail(e), b = sh.head(e);
    edges.emplace_back(tree_v(a, sh.out_leaf[e]), path_v(e, 1));
    for (std::size_t j = 1; j < 2 * l; ++j) edges.emplace_back(path_v(e, j), path_v(e, j + 1));
    edges.emplace_back(path_v(e, 2 * l), tree_v(b, sh.in_leaf[e]));
    auto& p = ag.labels[role_key("path", a, b)];
    for (std::size_t j = 1; j <= 2 * l; ++j) p.push_back(path_v(e, j));
    ag.labels[role_key("v", a, b)] = {path_v(e, l)};
    ag.labels[role_key("v", b, a)] = {path_v(e, l + 1)};
    ag.labels[role_key("middle-edge", a, b)] = {path_v(e, l), path_v(e, l + 1)};
    ag.labels[role_key("leaf-out", a, b)] = {tree_v(a, sh.out_leaf[e])};
    ag.labels[role_key("leaf-in", b, a)] = {tree_v(b, sh.in_leaf[e])};
    // Ball halves: the tail side p_1..p_l belongs to a, the rest to b.
    auto& ba = ag.labels[role_key("ball", a)];
    auto& bb = ag.labels[role_key("ball", b)];
    for (std::size_t j = 1; j <= l; ++j) ba.push_back(path_v(e, j));
    for (std::size_t j = l + 1; j <= 2 * l; ++j) bb.push_back(path_v(e, j));
  }
  for (Vertex a = 0; a < nb; ++a) {
    auto& ball = ag.labels[role_key("ball", a)];
    const auto& t = ag.labels[role_key("tree", a)];
    ball.insert(ball.end(), t.begin(), t.end());
    std::sort(ball.begin(), ball.end());
  }
  ag.graph = Graph::build(trees + sh.base.size() * 2 * l, edges);
  ag.base = sh.base;
  ag.orientation = sh.orient;
  return ag;
}

namespace detail {

// Vertices within distance < limit of `from`, ignoring the single edge (x,y).
inline std::vector<Vertex> near_without_edge(const Graph& g, Vertex from, std::size_t limit, Vertex x, Vertex y) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{from}, out;
  dist[from] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex v = queue[h];
    if (dist[v] >= limit) continue;
    out.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if ((v == x && w == y) || (v == y && w == x)) continue;
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Copy 1 is laid out exactly like expanded_graph(s, ℓ). Copy 2 follows: its
// trees, then per base edge the 2ℓ-2 path vertices it does not share with copy
// 1 (the middle edge is shared). Then the pendant paths Q(a), n_H*m vertices,
// with q(a) the far end; the cycle C joins q(0), q(1), ... in index order.
inline AnnotatedGraph full_construction(std::size_t s, std::size_t l, std::size_t m) {
  if (m < 1) throw FamilyError("full_construction: pendant path length must be at least 1");
  detail::ExpansionShape sh(s, l);
  const std::size_t nb = sh.base.order();
  const std::size_t mb = sh.base.size();
  const std::size_t trees = nb * sh.tree_size;
  const std::size_t copy1 = trees + mb * 2 * l;
  const std::size_t copy2_paths = copy1 + trees;
  const std::size_t qstart = copy2_paths + mb * (2 * l - 2);
  const std::size_t total = qstart + nb * m;

  auto tree_v = [&](int i, Vertex a, std::size_t node) {
    return static_cast<Vertex>((i == 1 ? 0 : copy1) + a * sh.tree_size + node);
  };
  // j = 1..2l along P_i(ab) from the tail side.
  auto path_v = [&](int i, EdgeId e, std::size_t j) {
    if (i == 1 || j == l || j == l + 1) return static_cast<Vertex>(trees + e * 2 * l + (j - 1));
    std::size_t off = j < l ? j - 1 : j - 3;
    return static_cast<Vertex>(copy2_paths + e * (2 * l - 2) + off);
  };
  auto q_v = [&](Vertex a, std::size_t j) {  // j = 1..m
    return static_cast<Vertex>(qstart + a * m + (j - 1));
  };

  AnnotatedGraph ag;
  ag.family = "hslm";
  ag.params = {{"s", static_cast<std::int64_t>(s)},
               {"l", static_cast<std::int64_t>(l)},
               {"m", static_cast<std::int64_t>(m)}};
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= 2; ++i) {
    for (Vertex a = 0; a < nb; ++a) {
      for (std::size_t x = 0; 2 * x + 2 < sh.tree_size; ++x) {
        edges.emplace_back(tree_v(i, a, x), tree_v(i, a, 2 * x + 1));
        edges.emplace_back(tree_v(i, a, x), tree_v(i, a, 2 * x + 2));
      }
      ag.labels[role_key("root", i, a)] = {tree_v(i, a, 0)};
      ag.labels[role_key("in", i, a)] = {tree_v(i, a, 1)};
      ag.labels[role_key("out", i, a)] = {tree_v(i, a, 2)};
      auto& t = ag.labels[role_key("tree", i, a)];
      for (std::size_t x = 0; x < sh.tree_size; ++x) t.push_back(tree_v(i, a, x));
      ag.labels[role_key("roots", i)].push_back(tree_v(i, a, 0));
    }
    for (EdgeId e = 0; e < mb; ++e) {
      Vertex a = sh.tail(e), b = sh.head(e);
      edges.emplace_back(tree_v(i, a, sh.out_leaf[e]), path_v(i, e, 1));
      for (std::size_t j = 1; j < 2 * l; ++j)
        if (i == 1 || j != l) edges.emplace_back(path_v(i, e, j), path_v(i, e, j + 1));
      edges.emplace_back(path_v(i, e, 2 * l), tree_v(i, b, sh.in_leaf[e]));
      auto& p = ag.labels[role_key("path", i, a, b)];
      for (std::size_t j = 1; j <= 2 * l; ++j) p.push_back(path_v(i, e, j));
      ag.labels[role_key("leaf-out", i, a, b)] = {tree_v(i, a, sh.out_leaf[e])};
      ag.labels[role_key("leaf-in", i, b, a)] = {tree_v(i, b, sh.in_leaf[e])};
      auto& ba = ag.labels[role_key("ball", i, a)];
      auto& bb = ag.labels[role_key("ball", i, b)];
      for (std::size_t j = 1; j <= l; ++j) ba.push_back(path_v(i, e, j));
      for (std::size_t j = l + 1; j <= 2 * l; ++j) bb.push_back(path_v(i, e, j));
      if (i == 1) {
        ag.labels[role_key("v", a, b)] = {path_v(1, e, l)};
        ag.labels[role_key("v", b, a)] = {path_v(1, e, l + 1)};
        ag.labels[role_key("middle-edge", a, b)] = {path_v(1, e, l), path_v(1, e, l + 1)};
      }
    }
    for (Vertex a = 0; a < nb; ++a) {
      auto& ball = ag.labels[role_key("ball", i, a)];
      const auto& t = ag.labels[role_key("tree", i, a)];
      ball.insert(ball.end(), t.begin(), t.end());
      std::sort(ball.begin(), ball.end());
    }
  }
  for (Vertex a = 0; a < nb; ++a) {
    edges.emplace_back(tree_v(1, a, 0), q_v(a, 1));
    for (std::size_t j = 1; j < m; ++j) edges.emplace_back(q_v(a, j), q_v(a, j + 1));
    auto& q = ag.labels[role_key("Q", a)];
    for (std::size_t j = 1; j <= m; ++j) q.push_back(q_v(a, j));
    ag.labels[role_key("q", a)] = {q_v(a, m)};
    ag.labels["cycle"].push_back(q_v(a, m));
  }
  for (Vertex a = 0; a < nb; ++a) edges.emplace_back(q_v(a, m), q_v((a + 1) % nb, m));
  ag.graph = Graph::build(total, edges);

  for (Vertex a = 0; a < nb; ++a) {
    std::vector<Vertex> sa;
    for (const char* name : {"ball:1:", "ball:2:", "Q:"}) {
      const auto& part = ag.labels[name + std::to_string(a)];
      sa.insert(sa.end(), part.begin(), part.end());
    }
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    ag.labels[role_key("S", a)] = std::move(sa);
    for (int i = 1; i <= 2; ++i)
      ag.labels[role_key("F", i, a)] =
          detail::near_without_edge(ag.graph, tree_v(i, a, 0), 2 * s, tree_v(i, a, 0), tree_v(i, a, 1));
  }
  ag.base = sh.base;
  ag.orientation = sh.orient;
  return ag;
}

// Maps every vertex of copy 2 to its twin in copy 1 (shared middle vertices
// map to themselves); copy-1 vertices and Q vertices map to nullopt.
inline std::vector<std::optional<Vertex>> copy2_to_copy1(const AnnotatedGraph& h) {
  std::vector<std::optional<Vertex>> out(h.graph.order());
  const auto& base = *h.base;
  for (Vertex a = 0; a < base.order(); ++a) {
    const auto& t1 = h.role(role_key("tree", 1, a));
    const auto& t2 = h.role(role_key("tree", 2, a));
    for (std::size_t x = 0; x < t1.size(); ++x) out[t2[x]] = t1[x];
  }
  for (EdgeId e = 0; e < base.size(); ++e) {
    auto [a, b] = h.orientation->arcs[e];
    const auto& p1 = h.role(role_key("path", 1, a, b));
    const auto& p2 = h.role(role_key("path", 2, a, b));
    for (std::size_t j = 0; j < p1.size(); ++j) out[p2[j]] = p1[j];
  }
  return out;
}

}  // namespace surround
