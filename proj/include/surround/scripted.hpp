#pragma once

// Cop and robber controllers that follow the case analyses of the proofs, and
// a registry building them from an annotated graph.
//
// Scripted controllers are strict: a situation outside their case analysis
// raises StrategyViolation and the match aborts with that diagnosis.

#include <algorithm>
#include <array>
#include <limits>
#include <span>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surround/families.hpp"
#include "surround/lifting.hpp"
#include "surround/match.hpp"
#include "surround/solver.hpp"

namespace surround {

class ScriptError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Multi-source BFS; `pass(v, w)` filters the edges that may be used.
template <class Pass>
std::vector<std::size_t> bfs_distances(const Graph& g, std::span<const Vertex> sources, Pass&& pass) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex s : sources)
    if (dist[s] == kUnreachable) {
      dist[s] = 0;
      queue.push_back(s);
    }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex v = queue[h];
    for (Vertex w : g.neighbors(v))
      if (dist[w] == kUnreachable && pass(v, w)) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

inline auto any_edge = [](Vertex, Vertex) { return true; };

// One step from `from` along a shortest path described by `dist` (distances to
// the target); ties go to the smallest vertex. Stays when already there or cut off.
template <class Pass>
Vertex step_down(const Graph& g, Vertex from, const std::vector<std::size_t>& dist, Pass&& pass) {
  if (dist[from] == 0 || dist[from] == kUnreachable) return from;
  for (Vertex w : g.neighbors(from))
    if (dist[w] + 1 == dist[from] && pass(from, w)) return w;
  return from;
}

inline Vertex step_toward(const Graph& g, Vertex from, Vertex to) {
  Vertex src[1] = {to};
  return step_down(g, from, bfs_distances(g, src, any_edge), any_edge);
}

// Distances over cop positions (vertices or edges) to `target`.
inline std::vector<std::size_t> position_distances(const GameSpec& spec, Position target) {
  std::vector<std::size_t> dist(spec.domain_size(), kUnreachable);
  std::vector<Position> queue{target};
  dist[target] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Position q : cop_moves_from(spec, queue[h]))
      if (dist[q] == kUnreachable) {
        dist[q] = dist[queue[h]] + 1;
        queue.push_back(q);
      }
  return dist;
}

inline Position position_step(const GameSpec& spec, Position from, const std::vector<std::size_t>& dist) {
  if (dist[from] == 0 || dist[from] == kUnreachable) return from;
  for (Position q : cop_moves_from(spec, from))
    if (dist[q] + 1 == dist[from]) return q;
  return from;
}

inline std::shared_ptr<const Graph> share(const Graph& g) { return std::make_shared<const Graph>(g); }

}  // namespace detail

// Cop controller that keeps its own per-cop positions and checks them against
// the configuration it is shown.
class TrackedCops : public CopController {
 public:
  std::string memory_key() const override {
    std::ostringstream os;
    for (auto p : pos_) os << p << ',';
    os << '|' << state_key();
    return os.str();
  }

 protected:
  virtual std::string state_key() const { return {}; }

  void expect(const GameSpec& spec, Variant v, std::size_t k) const {
    if (spec.variant != v || spec.k != k)
      violation("needs " + std::to_string(k) + " cops in " + std::string(variant_name(v)) + ", got " +
                std::to_string(spec.k) + " in " + std::string(variant_name(spec.variant)));
  }
  void sync(const Configuration& c) const {
    if (sorted_copy(pos_) != c.cops) violation("cop positions differ from the controller's record");
  }
  [[noreturn]] void violation(const std::string& what) const { throw StrategyViolation(name() + ": " + what); }

  // A cop on the robber or next to him, vertex variants only.
  std::optional<std::size_t> capturer(const Graph& g, Vertex r) const {
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (pos_[i] == r) return i;
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (g.adjacent(pos_[i], r)) return i;
    return std::nullopt;
  }

  std::vector<Position> pos_;
};

class TrackedRobber : public RobberController {
 protected:
  [[noreturn]] void violation(const std::string& what) const { throw StrategyViolation(name() + ": " + what); }
  void expect(const GameSpec& spec, Variant v, std::size_t max_cops) const {
    if (spec.variant != v) violation("plays " + std::string(variant_name(v)) + " only");
    if (spec.k > max_cops)
      violation("covers at most " + std::to_string(max_cops) + " cops, got " + std::to_string(spec.k));
  }
};

// ---------------------------------------------------------------------------
// Complete bipartite graphs.

class BipartiteCops : public TrackedCops {
 public:
  // `small` is the class of size δ, `large` the one of size Δ.
  BipartiteCops(Variant v, std::vector<Vertex> small, std::vector<Vertex> large)
      : v_(v), small_(std::move(small)), large_(std::move(large)) {}

  static std::size_t cops_for(Variant v, std::size_t delta, std::size_t Delta) {
    switch (v) {
      case Variant::Classical: return std::min<std::size_t>(2, delta);
      case Variant::VertexSurroundRestrictive: return delta;
      default: return Delta;
    }
  }
  std::size_t cops() const { return cops_for(v_, small_.size(), large_.size()); }

  std::vector<Position> place(const GameSpec& spec) override {
    expect(spec, v_, cops());
    switch (v_) {
      case Variant::Classical:
        pos_ = small_.size() == 1 ? std::vector<Position>{small_[0]} : std::vector<Position>{small_[0], large_[0]};
        break;
      case Variant::VertexSurroundRestrictive: pos_.assign(small_.begin(), small_.end()); break;
      case Variant::VertexSurround: pos_.assign(large_.begin(), large_.end()); break;
      default: {
        // One cop per large vertex, cycling over the small class, so every
        // vertex has an occupied incident edge.
        pos_.clear();
        for (std::size_t j = 0; j < large_.size(); ++j)
          pos_.push_back(*spec.g().edge_between(small_[j % small_.size()], large_[j]));
      }
    }
    return pos_;
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    sync(c);
    const Vertex r = c.robber;
    const bool in_small = std::find(small_.begin(), small_.end(), r) != small_.end();
    switch (v_) {
      case Variant::Classical: {
        auto i = capturer(spec.g(), r);
        if (!i) violation("no cop next to the robber");
        pos_[*i] = r;
        return pos_;
      }
      case Variant::VertexSurroundRestrictive:
        if (in_small) violation("robber on the occupied class");
        return pos_;
      case Variant::VertexSurround:
        if (in_small) return pos_;
        for (std::size_t i = 0; i < small_.size(); ++i) pos_[i] = small_[i];
        return pos_;
      default: {
        std::vector<std::size_t> all(pos_.size());
        std::iota(all.begin(), all.end(), 0);
        auto out = cover_targets(spec, pos_, all, surround_targets(spec, r));
        if (!out) violation("cannot cover the edges at " + std::to_string(r));
        pos_ = *out;
        return pos_;
      }
    }
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<BipartiteCops>(*this); }
  std::string name() const override { return "bipartite-cops/" + std::string(variant_name(v_)); }

 private:
  Variant v_;
  std::vector<Vertex> small_, large_;
};

// Classes of a complete bipartite graph, from the A/B annotation or a
// 2-colouring; nullopt when the graph is not complete bipartite.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartite_classes(const AnnotatedGraph& ag,
                                                                                           const Graph& g) {
  std::vector<Vertex> a, b;
  if (ag.has("A") && ag.has("B")) {
    a = ag.role("A");
    b = ag.role("B");
  } else {
    std::vector<int> side(g.order(), -1);
    if (g.order() == 0) return std::nullopt;
    side[0] = 0;
    std::vector<Vertex> queue{0};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.neighbors(queue[h])) {
        if (side[w] < 0) {
          side[w] = 1 - side[queue[h]];
          queue.push_back(w);
        } else if (side[w] == side[queue[h]]) {
          return std::nullopt;
        }
      }
    for (Vertex v = 0; v < g.order(); ++v) (side[v] == 0 ? a : b).push_back(v);
  }
  if (a.empty() || b.empty() || a.size() + b.size() != g.order() || g.size() != a.size() * b.size()) return std::nullopt;
  for (Vertex x : a)
    for (Vertex y : b)
      if (!g.adjacent(x, y)) return std::nullopt;
  if (a.size() > b.size()) std::swap(a, b);
  return std::make_pair(a, b);
}

// ---------------------------------------------------------------------------
// Regular host graphs with leaves attached.

struct LeafyLayout {
  std::size_t host_order = 0, leaves = 0, degree = 0;
  Graph host;

  explicit LeafyLayout(const AnnotatedGraph& ag) {
    if (!ag.params.count("leaves") || !ag.params.count("host_order"))
      throw ScriptError("leafy strategies need a graph built by attach_leaves");
    host_order = static_cast<std::size_t>(ag.param("host_order"));
    leaves = static_cast<std::size_t>(ag.param("leaves"));
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : ag.graph.edges())
      if (e.u < host_order && e.v < host_order) edges.emplace_back(e.u, e.v);
    host = Graph::build(host_order, edges);
    auto d = degrees(host);
    if (d.min != d.max) throw ScriptError("leafy strategies need a regular host graph");
    degree = d.max;
    if (leaves < 1) throw ScriptError("leafy strategies need at least one leaf per host vertex");
  }
  bool is_host(Vertex v) const { return v < host_order; }
  Vertex host_of(Vertex v) const {
    return is_host(v) ? v : static_cast<Vertex>((v - host_order) / leaves);
  }
  std::vector<Vertex> leaves_of(Vertex v) const {
    std::vector<Vertex> out;
    for (std::size_t t = 0; t < leaves; ++t) out.push_back(static_cast<Vertex>(host_order + v * leaves + t));
    return out;
  }
};

class LeafyTwoPhaseCops : public TrackedCops {
 public:
  LeafyTwoPhaseCops(const AnnotatedGraph& ag, Variant v, std::unique_ptr<CopController> inner, GameSpec inner_spec)
      : lay_(std::make_shared<const LeafyLayout>(ag)), v_(v), inner_(std::move(inner)), inner_spec_(std::move(inner_spec)) {
    const std::size_t k = lay_->degree;
    total_ = std::max(inner_spec_.k, v_ == Variant::VertexSurroundRestrictive ? k + 1 : k + lay_->leaves);
    if (on_edges(v_)) {
      auto map = std::make_shared<std::vector<EdgeId>>();
      for (auto e : inner_spec_.g().edges()) map->push_back(*ag.graph.edge_between(e.u, e.v));
      host_to_g_ = map;
    }
  }
  LeafyTwoPhaseCops(const LeafyTwoPhaseCops& o)
      : TrackedCops(o),
        lay_(o.lay_),
        v_(o.v_),
        inner_(o.inner_->clone()),
        inner_spec_(o.inner_spec_),
        host_to_g_(o.host_to_g_),
        total_(o.total_),
        inner_pos_(o.inner_pos_),
        phase_(o.phase_),
        centre_(o.centre_),
        walkers_(o.walkers_) {}

  std::size_t cops() const { return total_; }

  std::vector<Position> place(const GameSpec& spec) override {
    expect(spec, v_, total_);
    inner_pos_ = sorted_copy(inner_->place(inner_spec_));
    pos_ = lifted(inner_pos_);
    while (pos_.size() < total_) pos_.push_back(pos_.front());
    return pos_;
  }

  void observe_robber(const GameSpec&, const Configuration& c) override {
    if (phase_ == 1) inner_->observe_robber(inner_spec_, {inner_pos_, lay_->host_of(c.robber), Side::Cops});
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    sync(c);
    const Vertex r = c.robber;
    const Vertex v = lay_->host_of(r);
    if (phase_ == 1 && host_side_closed(spec, v)) {
      phase_ = 2;
      centre_ = v;
      log.push_back("phase 2 at host vertex " + std::to_string(v));
    }
    if (phase_ == 1) {
      // A robber on a leaf below an occupied host vertex is already surrounded.
      if (v_ == Variant::VertexSurroundRestrictive && !lay_->is_host(r) &&
          std::find(pos_.begin(), pos_.end(), v) != pos_.end())
        return pos_;
      auto next = sorted_copy(inner_->move(inner_spec_, {inner_pos_, v, Side::Cops}));
      if (!joint_move_legal(inner_spec_, inner_pos_, next)) violation("inner strategy made an illegal move");
      inner_pos_ = next;
      auto out = lifted(inner_pos_);
      for (std::size_t i = out.size(); i < pos_.size(); ++i) out.push_back(pos_[i]);
      pos_ = out;
      return pos_;
    }
    if (v != centre_) violation("robber left the closed neighbourhood of host vertex " + std::to_string(centre_));
    return on_edges(v_) ? close_edges(spec) : close_vertex(spec);
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<LeafyTwoPhaseCops>(*this); }
  std::string name() const override {
    return std::string(v_ == Variant::VertexSurroundRestrictive ? "leafy-two-phase-vr" : "leafy-two-phase-er") + "(" +
           inner_->name() + ")";
  }

 protected:
  std::string state_key() const override {
    std::ostringstream os;
    os << phase_ << ':' << centre_ << ':';
    for (auto w : walkers_) os << w << ',';
    return os.str() + '|' + inner_->memory_key();
  }

 private:
  std::vector<Position> lifted(const std::vector<Position>& host_pos) const {
    if (!on_edges(v_)) return host_pos;
    std::vector<Position> out;
    for (auto p : host_pos) out.push_back((*host_to_g_)[p]);
    return out;
  }

  // Host neighbours (or host edges) of v all occupied.
  bool host_side_closed(const GameSpec& spec, Vertex v) const {
    auto occupied = [&](Position p) { return std::find(pos_.begin(), pos_.end(), p) != pos_.end(); };
    for (Vertex w : lay_->host.neighbors(v))
      if (!occupied(on_edges(v_) ? *spec.g().edge_between(v, w) : w)) return false;
    return true;
  }

  // Cops holding the host side, one per neighbour / edge; the rest are free.
  std::vector<std::size_t> free_cops(const GameSpec& spec) const {
    std::vector<char> used(pos_.size(), 0);
    for (Vertex w : lay_->host.neighbors(centre_)) {
      Position p = on_edges(v_) ? *spec.g().edge_between(centre_, w) : w;
      for (std::size_t i = 0; i < pos_.size(); ++i)
        if (!used[i] && pos_[i] == p) {
          used[i] = 1;
          break;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pos_.size(); ++i)
      if (!used[i]) out.push_back(i);
    return out;
  }

  std::vector<Position> close_vertex(const GameSpec& spec) {
    if (walkers_.empty()) {
      auto dist = distances_from(spec.g(), centre_);
      auto fr = free_cops(spec);
      if (fr.empty()) violation("no free cop for the second phase");
      walkers_.push_back(*std::min_element(fr.begin(), fr.end(), [&](auto a, auto b) {
        return std::pair(dist[pos_[a]], a) < std::pair(dist[pos_[b]], b);
      }));
    }
    auto& p = pos_[walkers_[0]];
    p = detail::step_toward(spec.g(), p, centre_);
    return pos_;
  }

  std::vector<Position> close_edges(const GameSpec& spec) {
    std::vector<Position> targets;
    for (Vertex w : lay_->leaves_of(centre_)) targets.push_back(*spec.g().edge_between(centre_, w));
    if (walkers_.empty()) {
      auto fr = free_cops(spec);
      if (fr.size() < targets.size()) violation("too few free cops for the leaf edges");
      for (Position t : targets) {
        auto dist = detail::position_distances(spec, t);
        auto best = std::min_element(fr.begin(), fr.end(), [&](auto a, auto b) {
          return std::pair(dist[pos_[a]], a) < std::pair(dist[pos_[b]], b);
        });
        walkers_.push_back(*best);
        fr.erase(best);
      }
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
      auto& p = pos_[walkers_[t]];
      p = detail::position_step(spec, p, detail::position_distances(spec, targets[t]));
    }
    return pos_;
  }

  std::shared_ptr<const LeafyLayout> lay_;
  Variant v_;
  std::unique_ptr<CopController> inner_;
  GameSpec inner_spec_;
  std::shared_ptr<const std::vector<EdgeId>> host_to_g_;
  std::size_t total_ = 0;
  std::vector<Position> inner_pos_;
  int phase_ = 1;
  Vertex centre_ = 0;
  std::vector<std::size_t> walkers_;
};

// Robber that keeps to safe host vertices (non-restrictive vertex or edge game).
class LeafySafeRobber : public TrackedRobber {
 public:
  enum class Rule { Near, Far };  // closed-neighbourhood count, or the girth-based B sets

  LeafySafeRobber(const AnnotatedGraph& ag, Variant v) : lay_(std::make_shared<const LeafyLayout>(ag)), v_(v) {
    girth_ = girth(lay_->host).value_or(std::numeric_limits<std::size_t>::max());
  }

  // Bound below which each rule is proven, and the best of them.
  std::size_t near_bound() const {
    const std::size_t k = lay_->degree, l = lay_->leaves;
    if (!on_edges(v_)) return (k + 1) * l;
    std::size_t b = ((k + 1) * l + 1) / 2;
    if (girth_ >= 4) b = std::max(b, k * l);
    return b;
  }
  std::size_t far_bound() const {
    const std::size_t k = lay_->degree, l = lay_->leaves;
    return girth_ >= (on_edges(v_) ? 6u : 7u) ? k * (k + l - 1) : 0;
  }
  std::size_t max_cops() const { return std::max(near_bound(), far_bound()) - 1; }

  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    expect(spec, v_, max_cops());
    rule_ = spec.k < near_bound() ? Rule::Near : Rule::Far;
    if (rule_ == Rule::Near) {
      for (Vertex v = 0; v < lay_->host_order; ++v)
        if (near_safe(spec, cops, v)) return v;
    } else {
      for (Vertex vr = 0; vr < lay_->host_order; ++vr)
        for (Vertex v : lay_->host.neighbors(vr))
          if (far_safe(spec, cops, v, vr)) return v;
    }
    violation("no safe host vertex to start on");
  }

  Vertex move(const GameSpec& spec, const Configuration& c) override {
    const Vertex r = c.robber;
    if (!lay_->is_host(r)) violation("robber left the host graph");
    if (rule_ == Rule::Near) {
      if (near_safe(spec, c.cops, r)) return r;
      for (Vertex w : lay_->host.neighbors(r))
        if (near_safe(spec, c.cops, w)) return w;
    } else {
      for (Vertex w : lay_->host.neighbors(r))
        if (far_safe(spec, c.cops, w, r)) return w;
    }
    violation("no safe host vertex next to " + std::to_string(r));
  }

  std::unique_ptr<RobberController> clone() const override { return std::make_unique<LeafySafeRobber>(*this); }
  std::string name() const override { return "leafy-safe-robber/" + std::string(variant_name(v_)); }

 private:
  static std::size_t count_in(std::span<const Position> cops, const std::vector<char>& mark) {
    std::size_t n = 0;
    for (auto p : cops) n += mark[p] ? 1 : 0;
    return n;
  }

  // Fewer than ℓ cops on v and its leaves, or on the edges at v.
  bool near_safe(const GameSpec& spec, std::span<const Position> cops, Vertex v) const {
    const Graph& g = spec.g();
    std::vector<char> mark(spec.domain_size(), 0);
    if (on_edges(v_)) {
      for (EdgeId e : g.incident_edges(v)) mark[e] = 1;
    } else {
      mark[v] = 1;
      for (Vertex w : lay_->leaves_of(v)) mark[w] = 1;
    }
    return count_in(cops, mark) < lay_->leaves;
  }

  // Fewer than k+ℓ-1 cops can reach the neighbours of v other than vr.
  bool far_safe(const GameSpec& spec, std::span<const Position> cops, Vertex v, Vertex vr) const {
    const Graph& g = spec.g();
    std::vector<char> mark(spec.domain_size(), 0);
    std::vector<Vertex> around{v};
    for (Vertex w : g.neighbors(v))
      if (w != vr) around.push_back(w);
    if (on_edges(v_)) {
      for (Vertex x : around)
        for (EdgeId e : g.incident_edges(x))
          if (!g.edge(e).has(vr)) mark[e] = 1;
      mark[*g.edge_between(v, vr)] = 1;
    } else {
      for (Vertex x : around) {
        mark[x] = 1;
        for (Vertex y : g.neighbors(x)) mark[y] = 1;
      }
      // N[v_r] \ {v} is excluded.
      mark[vr] = 0;
      for (Vertex y : g.neighbors(vr))
        if (y != v) mark[y] = 0;
    }
    return count_in(cops, mark) + 1 < lay_->degree + lay_->leaves;
  }

  std::shared_ptr<const LeafyLayout> lay_;
  Variant v_;
  std::size_t girth_ = 0;
  Rule rule_ = Rule::Near;
};

// ---------------------------------------------------------------------------
// Graphs from mutually orthogonal Latin squares.

struct MolsLayout {
  std::size_t k = 0;
  std::vector<Vertex> rows, parts;
  explicit MolsLayout(const AnnotatedGraph& ag) {
    if (!ag.has("rows") || !ag.has("parts") || !ag.has("positions")) throw ScriptError("mols strategies need rows/parts/positions annotations");
    k = static_cast<std::size_t>(ag.param("k"));
    rows = ag.role("rows");
    parts = ag.role("parts");
  }
  bool is_part(Vertex v) const { return std::binary_search(parts.begin(), parts.end(), v); }
  // Position of part p in row i.
  Vertex part_cell(const Graph& g, Vertex p, std::size_t i) const {
    for (Vertex w : g.neighbors(p))
      if (g.adjacent(w, rows[i])) return w;
    throw StrategyViolation("mols layout: part without a cell in row " + std::to_string(i));
  }
};

class MolsCops : public TrackedCops {
 public:
  MolsCops(const AnnotatedGraph& ag, Variant v) : lay_(std::make_shared<const MolsLayout>(ag)), v_(v) {}

  std::size_t cops() const { return v_ == Variant::Classical ? lay_->k : lay_->k + 1; }

  std::vector<Position> place(const GameSpec& spec) override {
    expect(spec, v_, cops());
    pos_.assign(lay_->rows.begin(), lay_->rows.end());
    if (v_ != Variant::Classical) pos_.push_back(lay_->rows[0]);
    return pos_;
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    sync(c);
    const Graph& g = spec.g();
    const Vertex r = c.robber;
    if (v_ == Variant::Classical)
      if (auto i = capturer(g, r)) {
        pos_[*i] = r;
        return pos_;
      }
    if (lay_->is_part(r)) {
      for (std::size_t i = 0; i < lay_->k; ++i) {
        if (pos_[i] != lay_->rows[i]) violation("row cop " + std::to_string(i) + " is off its row");
        pos_[i] = lay_->part_cell(g, r, i);
      }
      return pos_;
    }
    if (v_ == Variant::Classical) violation("robber out of reach of every row cop");
    // Restrictive game, robber on a cell: the extra cop walks onto him.
    for (std::size_t i = 0; i < lay_->k; ++i)
      if (pos_[i] != lay_->rows[i]) violation("row cop " + std::to_string(i) + " is off its row");
    pos_[lay_->k] = detail::step_toward(g, pos_[lay_->k], r);
    return pos_;
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<MolsCops>(*this); }
  std::string name() const override { return v_ == Variant::Classical ? "mols-cops-classical" : "mols-cops-vr"; }

 private:
  std::shared_ptr<const MolsLayout> lay_;
  Variant v_;
};

// ---------------------------------------------------------------------------
// Line graphs of complete graphs. Pairs are 0-based.

struct LineLayout {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> pair_of;  // line-graph vertex -> {x, y}, x < y
  std::vector<std::vector<Vertex>> vertex_of;      // [x][y] -> line-graph vertex

  explicit LineLayout(const AnnotatedGraph& ag) {
    if (!ag.params.count("n")) throw ScriptError("line-graph strategies need the parameter n");
    n = static_cast<std::size_t>(ag.param("n"));
    pair_of.resize(ag.graph.order());
    vertex_of.assign(n, std::vector<Vertex>(n, 0));
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        auto key = role_key("pair", x, y);
        if (!ag.has(key)) throw ScriptError("line-graph strategies need the annotation " + key);
        Vertex v = ag.vertex(key);
        pair_of[v] = {x, y};
        vertex_of[x][y] = vertex_of[y][x] = v;
      }
  }
  Vertex at(Vertex x, Vertex y) const { return vertex_of[x][y]; }
  // The path x-mid-y of K_n behind an edge of the line graph.
  std::array<Vertex, 3> path3(const Graph& g, EdgeId e) const {
    auto [a, b] = pair_of[g.edge(e).u];
    auto [c, d] = pair_of[g.edge(e).v];
    Vertex mid = (a == c || a == d) ? a : b;
    Vertex x = a == mid ? b : a;
    Vertex y = c == mid ? d : c;
    return {x, mid, y};
  }
};

class LineGraphCops : public TrackedCops {
 public:
  explicit LineGraphCops(const AnnotatedGraph& ag) : lay_(std::make_shared<const LineLayout>(ag)) {}
  std::size_t cops() const { return 2 * (lay_->n - 2); }

  std::vector<Position> place(const GameSpec& spec) override {
    expect(spec, Variant::VertexSurround, cops());
    const auto n = static_cast<Vertex>(lay_->n);
    pos_.clear();
    for (Vertex x = 1; x < n; ++x) pos_.push_back(lay_->at(0, x));
    for (Vertex y = 2; y + 1 < n; ++y) pos_.push_back(lay_->at(1, y));
    moved_ = false;
    return pos_;
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    sync(c);
    if (moved_) violation("the robber should have been surrounded after the first move");
    moved_ = true;
    const auto n = static_cast<Vertex>(lay_->n);
    const Vertex r = c.robber;
    auto idx = [&](Vertex x, Vertex y) {
      auto it = std::find(pos_.begin(), pos_.end(), lay_->at(x, y));
      if (it == pos_.end()) violation("no cop at the expected pair");
      return static_cast<std::size_t>(it - pos_.begin());
    };
    auto go = [&](Vertex x, Vertex y, Vertex u, Vertex w) { pos_[idx(x, y)] = lay_->at(u, w); };
    auto [a, b] = lay_->pair_of[r];
    bool on_cop = std::find(pos_.begin(), pos_.end(), r) != pos_.end();
    if (!on_cop) {
      std::vector<std::size_t> all(pos_.size());
      std::iota(all.begin(), all.end(), 0);
      auto out = cover_targets(spec, pos_, all, surround_targets(spec, r));
      if (!out) violation("cannot surround a robber off the cops");
      pos_ = *out;
    } else if (a == 0 && b == 1) {
      go(0, 1, 1, n - 1);
    } else if (a == 0 && b + 1 < n) {
      const Vertex x = b;
      go(0, x, x, n - 1);
      for (Vertex y = 2; y + 1 < n; ++y)
        if (y != x) go(1, y, x, y);
    } else if (a == 0) {
      // Robber on {0,n-1}: the case analysis as printed leaves {0,1} empty;
      // the robber's own cop refills it.
      go(0, 1, 1, n - 1);
      for (Vertex y = 2; y + 1 < n; ++y) go(1, y, n - 1, y);
      go(0, n - 1, 0, 1);
    } else {
      const Vertex y = b;
      // The cop on {1,y} covers {1,n-1}.
      go(1, y, 1, n - 1);
      for (Vertex x = 2; x < n; ++x)
        if (x != y) go(0, x, y, x);
    }
    if (!is_surrounded(spec, sorted_copy(pos_), r)) violation("case analysis did not surround the robber");
    return pos_;
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<LineGraphCops>(*this); }
  std::string name() const override { return "linegraph-cops-v"; }

 protected:
  std::string state_key() const override { return moved_ ? "1" : "0"; }

 private:
  std::shared_ptr<const LineLayout> lay_;
  bool moved_ = false;
};

// Robber on L(K_n) against edge cops, steering by p(v), the number of cop
// paths through v.
class LineGraphRobber : public TrackedRobber {
 public:
  LineGraphRobber(const AnnotatedGraph& ag, Variant v) : lay_(std::make_shared<const LineLayout>(ag)), v_(v) {}

  std::size_t max_cops() const {
    const std::size_t n = lay_->n;
    // Largest k with 3k < n(n-2), resp. 12k < n^2.
    return v_ == Variant::EdgeSurround ? (n * (n - 2) - 1) / 3 : (n * n - 1) / 12;
  }

  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    expect(spec, v_, max_cops());
    if (max_cops() == 0) violation("no cop count is covered for this n");
    auto p = counts(spec, cops);
    Vertex star = first_low(p, {});
    Vertex u = star == 0 ? 1 : 0;
    star_ = star;
    other_ = u;
    prev_star_count_ = p[star];
    return lay_->at(star, u);
  }

  Vertex move(const GameSpec& spec, const Configuration& c) override {
    auto p = counts(spec, c.cops);
    const Vertex r = c.robber;
    auto [a, b] = lay_->pair_of[r];
    if (v_ == Variant::EdgeSurround) {
      Vertex out = r;
      if (low(p[a]))
        star_ = a, other_ = b;
      else if (low(p[b]))
        star_ = b, other_ = a;
      else {
        Vertex s = first_low(p, {});
        star_ = s;
        other_ = a;
        out = lay_->at(s, a);
      }
      return out;
    }
    // Restrictive: the pair was {star, other} with p(star) low before the cops moved.
    if ((a != star_ || b != other_) && (a != other_ || b != star_)) violation("robber record out of sync");
    if (low(p[star_])) {
      prev_star_count_ = p[star_];
      return r;
    }
    if (low(p[other_])) {
      std::swap(star_, other_);
      prev_star_count_ = p[star_];
      return r;
    }
    const Graph& g = spec.g();
    std::size_t blocked = 0;
    std::optional<Vertex> pick;
    for (Vertex w = 0; w < lay_->n; ++w) {
      if (w == star_ || w == other_) continue;
      auto e = g.edge_between(r, lay_->at(star_, w));
      bool taken = std::binary_search(c.cops.begin(), c.cops.end(), static_cast<Position>(*e));
      blocked += taken ? 1 : 0;
      if (!pick && !taken && low(p[w])) pick = w;
    }
    if (blocked > prev_star_count_) violation("more paths through the robber's vertex blocked than counted before");
    if (!pick) violation("no low vertex reachable over a free path");
    other_ = star_;
    star_ = *pick;
    prev_star_count_ = p[star_];
    return lay_->at(star_, other_);
  }

  std::unique_ptr<RobberController> clone() const override { return std::make_unique<LineGraphRobber>(*this); }
  std::string name() const override {
    return v_ == Variant::EdgeSurround ? "linegraph-robber-e" : "linegraph-robber-er";
  }
  std::string memory_key() const override {
    return std::to_string(star_) + ':' + std::to_string(other_) + ':' + std::to_string(prev_star_count_);
  }

 private:
  bool low(std::size_t p) const {
    return v_ == Variant::EdgeSurround ? p + 2 < lay_->n : 2 * p < lay_->n;
  }
  Vertex first_low(const std::vector<std::size_t>& p, std::optional<Vertex> skip) const {
    for (Vertex v = 0; v < lay_->n; ++v)
      if (v != skip && low(p[v])) return v;
    violation("no low vertex although the cop count is below the bound");
  }
  std::vector<std::size_t> counts(const GameSpec& spec, std::span<const Position> cops) const {
    std::vector<std::size_t> p(lay_->n, 0);
    for (auto e : cops)
      for (Vertex x : lay_->path3(spec.g(), e)) ++p[x];
    std::size_t sum = std::accumulate(p.begin(), p.end(), std::size_t{0});
    if (sum != 3 * cops.size()) violation("path counts do not sum to three per cop");
    return p;
  }

  std::shared_ptr<const LineLayout> lay_;
  Variant v_;
  Vertex star_ = 0, other_ = 1;
  std::size_t prev_star_count_ = 0;
};

// ---------------------------------------------------------------------------
// Two glued tree-and-path expansions with pendant paths and a cycle.

struct HslmLayout {
  std::size_t s = 0, l = 0, m = 0, nb = 0;
  std::shared_ptr<const AnnotatedGraph> ag;
  Graph base;
  Orientation orient;
  std::vector<Vertex> cycle;
  std::vector<std::size_t> cycle_index;   // vertex -> index on C, or npos
  std::vector<Vertex> owner;              // vertex -> base vertex a with v in S(a)
  std::vector<std::optional<Vertex>> copy1;
  std::vector<char> shared;               // endpoints of middle edges
  std::vector<std::vector<Vertex>> tree1, tree2;  // heap-indexed
  std::vector<std::vector<char>> in_f1, in_f2;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit HslmLayout(const AnnotatedGraph& g) : ag(std::make_shared<const AnnotatedGraph>(g)) {
    if (!g.base || !g.orientation || !g.has("cycle")) throw ScriptError("hslm strategies need a graph built by full_construction");
    s = static_cast<std::size_t>(g.param("s"));
    l = static_cast<std::size_t>(g.param("l"));
    m = static_cast<std::size_t>(g.param("m"));
    base = *g.base;
    orient = *g.orientation;
    nb = base.order();
    const std::size_t n = g.graph.order();
    cycle = g.role("cycle");
    cycle_index.assign(n, npos);
    for (std::size_t i = 0; i < cycle.size(); ++i) cycle_index[cycle[i]] = i;
    owner.assign(n, 0);
    for (Vertex a = 0; a < nb; ++a)
      for (Vertex v : g.role(role_key("S", a))) owner[v] = a;
    copy1 = copy2_to_copy1(g);
    shared.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
      if (copy1[v] && *copy1[v] == v) shared[v] = 1;
    in_f1.assign(nb, std::vector<char>(n, 0));
    in_f2.assign(nb, std::vector<char>(n, 0));
    for (Vertex a = 0; a < nb; ++a) {
      tree1.push_back(g.role(role_key("tree", 1, a)));
      tree2.push_back(g.role(role_key("tree", 2, a)));
      for (Vertex v : g.role(role_key("F", 1, a))) in_f1[a][v] = 1;
      for (Vertex v : g.role(role_key("F", 2, a))) in_f2[a][v] = 1;
    }
  }
  const Graph& graph() const { return ag->graph; }
  bool on_cycle(Vertex v) const { return cycle_index[v] != npos; }
  bool in_h2_proper(Vertex v) const { return copy1[v] && *copy1[v] != v; }
  Vertex q(Vertex a) const { return ag->vertex(role_key("q", a)); }
  Vertex root(int i, Vertex a) const { return ag->vertex(role_key("root", i, a)); }
  // Inner vertices of P_i between a and b, from the tail side.
  const std::vector<Vertex>& path(int i, Vertex tail, Vertex head) const { return ag->role(role_key("path", i, tail, head)); }
  bool is_arc(Vertex a, Vertex b) const {
    auto e = base.edge_between(a, b);
    return e && orient.arcs[*e].first == a;
  }
  // Leaf of T_i(b) where the path between a and b ends.
  Vertex leaf_at(int i, Vertex b, Vertex a) const {
    return ag->vertex(role_key(is_arc(a, b) ? "leaf-in" : "leaf-out", i, b, a));
  }
  // Edge of H_-: every edge except those of C.
  bool minus_edge(Vertex v, Vertex w) const { return !(on_cycle(v) && on_cycle(w)); }
  // Middle edge crossed by a step from -> to, as (side left, side entered).
  std::optional<std::pair<Vertex, Vertex>> crossed_middle(Vertex from, Vertex to) const {
    if (!shared[from] || !shared[to] || from == to || owner[from] == owner[to]) return std::nullopt;
    return std::make_pair(owner[from], owner[to]);
  }
};

class HslmCops : public TrackedCops {
 public:
  explicit HslmCops(const AnnotatedGraph& ag) : lay_(std::make_shared<const HslmLayout>(ag)) {
    if (!satisfies_lemma5_bounds(lay_->s, lay_->l, lay_->m))
      throw ScriptError("hslm-cops-classical needs l > |V(base)| + m + s");
  }

  std::vector<Position> place(const GameSpec& spec) override {
    expect(spec, Variant::Classical, 2);
    pos_ = {lay_->cycle[0], lay_->cycle[0]};
    phase_ = 1;
    shadow_ = 0;
    committed_.reset();
    return pos_;
  }

  void observe_robber(const GameSpec&, const Configuration& c) override {
    prev_robber_ = started_ ? robber_ : c.robber;
    robber_ = c.robber;
    started_ = true;
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    sync(c);
    const Graph& g = spec.g();
    const Vertex r = c.robber;
    if (phase_ == 3) {
      // The robber stepped from the shadowed vertex; anything but a move
      // inside H_2 proper lets the shadow capture him.
      if (!lay_->in_h2_proper(r)) {
        if (pos_[shadow_] == r || g.adjacent(pos_[shadow_], r)) {
          pos_[shadow_] = r;
          return pos_;
        }
        violation("robber crossed a middle edge uncaptured in phase 3");
      }
    }
    if (auto i = capturer(g, r)) {
      pos_[*i] = r;
      return pos_;
    }
    switch (phase_) {
      case 1: phase_one(r); break;
      case 2: phase_two(r); break;
      default: phase_three(r); break;
    }
    return pos_;
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<HslmCops>(*this); }
  std::string name() const override { return "hslm-cops-classical"; }

 protected:
  std::string state_key() const override {
    std::ostringstream os;
    os << phase_ << ':' << shadow_ << ':' << (committed_ ? static_cast<long>(committed_->first) : -1) << ':'
       << prev_robber_ << ':' << robber_;
    return os.str();
  }

 private:
  // One step along C toward target (shorter way round; ties go forward).
  Vertex cycle_step(Vertex from, Vertex target) const {
    const auto& cy = lay_->cycle;
    const std::size_t n = cy.size(), i = lay_->cycle_index[from], j = lay_->cycle_index[target];
    if (i == j) return from;
    std::size_t fwd = (j + n - i) % n, back = (i + n - j) % n;
    return fwd <= back ? cy[(i + 1) % n] : cy[(i + n - 1) % n];
  }

  bool guards(Vertex cop, Vertex r) const { return !lay_->on_cycle(r) && cop == lay_->q(lay_->owner[r]); }

  void phase_one(Vertex r) {
    const Vertex target = lay_->q(lay_->owner[r]);
    if (!lay_->on_cycle(pos_[0])) violation("first cop left C in phase 1");
    const bool was_guarding = guards(pos_[0], r);
    pos_[0] = cycle_step(pos_[0], target);
    if (was_guarding && pos_[1] != pos_[0]) pos_[1] = cycle_step(pos_[1], pos_[0]);
    if (pos_[0] == pos_[1] && guards(pos_[0], r)) {
      phase_ = 2;
      log.push_back("phase 1 done: both cops guard at q(" + std::to_string(lay_->owner[r]) + ")");
    }
  }

  // Shortest-path step for the first cop, avoiding H_2 proper.
  Vertex c1_step(Vertex from, Vertex target) const {
    const Graph& g = lay_->graph();
    auto pass = [&](Vertex, Vertex w) { return !lay_->in_h2_proper(w); };
    Vertex src[1] = {target};
    return detail::step_down(g, from, detail::bfs_distances(g, src, pass), pass);
  }

  Vertex chase_step(Vertex from, Vertex r) const {
    const Graph& g = lay_->graph();
    auto pass = [&](Vertex v, Vertex w) { return lay_->minus_edge(v, w); };
    Vertex src[1] = {r};
    return detail::step_down(g, from, detail::bfs_distances(g, src, pass), pass);
  }

  void phase_two(Vertex r) {
    if (auto cr = lay_->crossed_middle(prev_robber_, r)) {
      committed_ = std::make_pair(cr->second, cr->first);
      log.push_back("robber crossed into S(" + std::to_string(cr->second) + "); first cop heads for the far leaf");
    } else if (committed_ && lay_->owner[r] != committed_->first) {
      committed_.reset();
      log.push_back("robber left S of the committed side; first cop guards again");
    }
    Vertex target;
    if (committed_) {
      auto [b, a] = *committed_;
      if (lay_->in_h2_proper(r) && lay_->owner[r] == b)
        target = *lay_->copy1[r];
      else
        target = lay_->leaf_at(1, b, a);
    } else {
      target = lay_->q(lay_->owner[r]);
    }
    pos_[0] = c1_step(pos_[0], target);
    pos_[1] = chase_step(pos_[1], r);
    if (lay_->in_h2_proper(r))
      for (std::size_t i = 0; i < 2; ++i)
        if (pos_[i] == *lay_->copy1[r]) {
          phase_ = 3;
          shadow_ = i;
          log.push_back(std::string(i == 0 ? "first" : "second") + " cop became the shadow at " + std::to_string(pos_[i]));
          if (i == 1) log.push_back("review: shadow established by the chasing cop");
          return;
        }
  }

  void phase_three(Vertex r) {
    const Graph& g = lay_->graph();
    const Vertex twin = *lay_->copy1[r];
    if (pos_[shadow_] != twin && !g.adjacent(pos_[shadow_], twin)) violation("shadow lost the robber's twin");
    pos_[shadow_] = twin;
    pos_[1 - shadow_] = chase_step(pos_[1 - shadow_], r);
  }

  std::shared_ptr<const HslmLayout> lay_;
  int phase_ = 1;
  std::size_t shadow_ = 0;
  std::optional<std::pair<Vertex, Vertex>> committed_;  // (side entered, side left)
  Vertex robber_ = 0, prev_robber_ = 0;
  bool started_ = false;
};

// Restrictive-vertex robber moving from root to root in the second copy.
class HslmRobber : public TrackedRobber {
 public:
  explicit HslmRobber(const AnnotatedGraph& ag) : lay_(std::make_shared<const HslmLayout>(ag)) {
    if (!satisfies_lemma6_bounds(lay_->s, lay_->l, lay_->m))
      throw ScriptError("hslm-robber-vr needs m > 2s+1 and l > 3s+1");
    auto d = std::make_shared<std::vector<std::vector<std::size_t>>>();
    for (Vertex b = 0; b < lay_->nb; ++b) {
      const auto& f = lay_->ag->role(role_key("F", 2, b));
      d->push_back(detail::bfs_distances(lay_->graph(), f, detail::any_edge));
    }
    to_f2_ = d;
  }

  std::size_t max_cops() const { return (std::size_t{1} << (lay_->s - 1)) - 1; }

  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    expect(spec, Variant::VertexSurroundRestrictive, max_cops());
    for (Vertex a = 0; a < lay_->nb; ++a)
      if (good(cops, a)) {
        arrive(cops, a);
        return lay_->root(2, a);
      }
    violation("no good starting root");
  }

  Vertex move(const GameSpec& spec, const Configuration& c) override {
    const Vertex r = c.robber;
    const auto& cops = c.cops;
    auto occupied = [&](Vertex v) { return std::binary_search(cops.begin(), cops.end(), v); };
    auto go = [&](Vertex v) {
      if (occupied(v)) violation("next vertex " + std::to_string(v) + " is occupied");
      if (v != r && !spec.g().adjacent(r, v)) violation("route is broken at " + std::to_string(r));
      return v;
    };
    if (!route_.empty()) {
      Vertex next = route_.front();
      route_.erase(route_.begin());
      if (route_.empty()) {
        if (!good(cops, target_)) violation("good situation fails at root " + std::to_string(target_));
        arrive(cops, target_);
      }
      return go(next);
    }
    const auto& t2 = lay_->tree2[a_];
    if (node_ == 0) {
      if (r != lay_->root(2, a_)) violation("robber record out of sync");
      node_ = 2;
      check_invariant(cops, node_);
      return go(t2[2]);
    }
    const std::size_t first_leaf = (std::size_t{1} << lay_->s) - 1;
    if (node_ < first_leaf) {
      // Descend into the child whose direction holds fewer cops than it has
      // available targets.
      std::optional<std::size_t> pick;
      std::optional<Vertex> pick_min;
      for (std::size_t child : {2 * node_ + 1, 2 * node_ + 2}) {
        auto [cnt, avail] = direction(cops, child);
        if (cnt < avail.size() && (!pick || avail.front() < *pick_min)) {
          pick = child;
          pick_min = avail.front();
        }
      }
      if (!pick) violation("no descent direction keeps fewer cops than available targets");
      node_ = *pick;
      if (node_ >= first_leaf) plan_route();
      return go(t2[node_]);
    }
    violation("robber record out of sync");
  }

  std::unique_ptr<RobberController> clone() const override { return std::make_unique<HslmRobber>(*this); }
  std::string name() const override { return "hslm-robber-vr"; }
  std::string memory_key() const override {
    std::ostringstream os;
    os << a_ << ':' << node_ << ':' << target_ << ':' << route_.size();
    return os.str();
  }

 private:
  bool good(std::span<const Position> cops, Vertex a) const {
    for (auto p : cops)
      if (lay_->in_f2[a][p]) return false;
    return true;
  }

  void arrive(std::span<const Position> cops, Vertex a) {
    a_ = a;
    node_ = 0;
    blocked_.clear();
    const std::size_t reach = 2 * lay_->l + 2 * lay_->s + 1;
    for (Vertex b : lay_->orient.out_neighbors(a))
      for (auto p : cops)
        if ((*to_f2_)[b][p] <= reach && !lay_->in_f1[a][p]) {
          blocked_.push_back(b);
          break;
        }
    std::sort(blocked_.begin(), blocked_.end());
    log.push_back("good situation at root " + std::to_string(a) + ", blocked " + std::to_string(blocked_.size()));
  }

  // Base vertex behind an out-leaf node of T(a).
  Vertex leaf_target(std::size_t node) const {
    Vertex leaf1 = lay_->tree1[a_][node];
    for (Vertex b : lay_->orient.out_neighbors(a_))
      if (lay_->ag->vertex(role_key("leaf-out", 1, a_, b)) == leaf1) return b;
    throw StrategyViolation("hslm layout: out-leaf without a path");
  }

  // Cops in direction `node` (subtree of T_1 plus the copy-1 paths of its
  // available targets) and those targets, ascending.
  std::pair<std::size_t, std::vector<Vertex>> direction(std::span<const Position> cops, std::size_t node) const {
    const std::size_t size = lay_->tree1[a_].size();
    std::vector<char> mark(lay_->graph().order(), 0);
    std::vector<Vertex> avail;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      mark[lay_->tree1[a_][x]] = 1;
      if (2 * x + 1 < size) {
        stack.push_back(2 * x + 1);
        stack.push_back(2 * x + 2);
      } else {
        Vertex b = leaf_target(x);
        if (!std::binary_search(blocked_.begin(), blocked_.end(), b)) {
          avail.push_back(b);
          for (Vertex v : lay_->path(1, a_, b)) mark[v] = 1;
        }
      }
    }
    std::sort(avail.begin(), avail.end());
    std::size_t cnt = 0;
    for (auto p : cops) cnt += mark[p] ? 1 : 0;
    return {cnt, avail};
  }

  void check_invariant(std::span<const Position> cops, std::size_t node) const {
    auto [cnt, avail] = direction(cops, node);
    for (auto p : cops) cnt += p == lay_->tree2[a_][node] ? 1 : 0;
    if (avail.empty() || cnt >= avail.size())
      violation("descent invariant fails: " + std::to_string(cnt) + " cops against " + std::to_string(avail.size()) +
                " available targets");
  }

  void plan_route() {
    const Vertex b = leaf_target(node_);
    if (std::binary_search(blocked_.begin(), blocked_.end(), b)) violation("descent ended at a blocked target");
    route_ = lay_->path(2, a_, b);
    std::size_t x = static_cast<std::size_t>(
        std::find(lay_->tree2[b].begin(), lay_->tree2[b].end(), lay_->ag->vertex(role_key("leaf-in", 2, b, a_))) -
        lay_->tree2[b].begin());
    while (true) {
      route_.push_back(lay_->tree2[b][x]);
      if (x == 0) break;
      x = (x - 1) / 2;
    }
    target_ = b;
  }

  std::shared_ptr<const HslmLayout> lay_;
  std::shared_ptr<const std::vector<std::vector<std::size_t>>> to_f2_;
  Vertex a_ = 0, target_ = 0;
  std::size_t node_ = 0;  // heap node of the robber in T_2(a), 0 at the root
  std::vector<Vertex> blocked_;
  std::vector<Vertex> route_;
};

// ---------------------------------------------------------------------------
// Registry.

struct ScriptedStrategy {
  std::string key;
  Variant variant = Variant::Classical;
  // Cops the cop strategy plays with, or the most cops the robber strategy is
  // proven against.
  std::size_t cops = 0;
  std::unique_ptr<CopController> cop;
  std::unique_ptr<RobberController> robber;
};

inline const std::vector<std::string>& scripted_keys() {
  static const std::vector<std::string> keys{
      "bipartite-cops/classical", "bipartite-cops/vertex",   "bipartite-cops/vertex-r", "bipartite-cops/edge",
      "bipartite-cops/edge-r",    "leafy-two-phase-vr",      "leafy-two-phase-er",      "leafy-safe-robber/vertex",
      "leafy-safe-robber/edge",   "mols-cops-classical",     "mols-cops-vr",            "linegraph-cops-v",
      "linegraph-robber-e",       "linegraph-robber-er",     "hslm-cops-classical",     "hslm-robber-vr"};
  return keys;
}

namespace detail {

// Inner cops for the host of a leafy graph: the bipartite script when the
// host is complete bipartite, else the solver's strategy.
inline std::pair<std::unique_ptr<CopController>, GameSpec> leafy_inner(const AnnotatedGraph& ag, const LeafyLayout& lay,
                                                                        Variant v, const SolveOptions& opts) {
  auto host = share(lay.host);
  if (auto cls = bipartite_classes(ag, lay.host)) {
    auto bc = std::make_unique<BipartiteCops>(v, cls->first, cls->second);
    std::size_t k = bc->cops();
    return {std::move(bc), GameSpec(host, v, k)};
  }
  CopNumberOptions co;
  co.solve = opts;
  co.keep_results = true;
  auto rep = cop_number(lay.host, v, co, "host");
  if (!rep.k_star || !rep.cop_win) throw ScriptError("cannot solve the host graph within the budget");
  return {std::make_unique<SolverCopController>(rep.cop_win, true), rep.cop_win->spec};
}

}  // namespace detail

inline ScriptedStrategy scripted_strategy(const AnnotatedGraph& ag, const std::string& key,
                                          const SolveOptions& opts = {}) {
  ScriptedStrategy out;
  out.key = key;
  auto suffix = [&](const std::string& head) -> std::optional<std::string> {
    if (key.rfind(head, 0) == 0) return key.substr(head.size());
    return std::nullopt;
  };
  try {
    if (auto vs = suffix("bipartite-cops/")) {
      auto cls = bipartite_classes(ag, ag.graph);
      if (!cls) throw ScriptError("bipartite-cops needs a complete bipartite graph");
      out.variant = parse_variant(*vs);
      auto c = std::make_unique<BipartiteCops>(out.variant, cls->first, cls->second);
      out.cops = c->cops();
      out.cop = std::move(c);
    } else if (key == "leafy-two-phase-vr" || key == "leafy-two-phase-er") {
      out.variant = key.back() == 'r' && key[key.size() - 2] == 'v' ? Variant::VertexSurroundRestrictive
                                                                     : Variant::EdgeSurroundRestrictive;
      LeafyLayout lay(ag);
      auto [inner, spec] = detail::leafy_inner(ag, lay, out.variant, opts);
      auto c = std::make_unique<LeafyTwoPhaseCops>(ag, out.variant, std::move(inner), spec);
      out.cops = c->cops();
      out.cop = std::move(c);
    } else if (auto vs = suffix("leafy-safe-robber/")) {
      out.variant = parse_variant(*vs);
      if (out.variant != Variant::VertexSurround && out.variant != Variant::EdgeSurround)
        throw ScriptError("leafy-safe-robber plays the vertex or edge game");
      auto r = std::make_unique<LeafySafeRobber>(ag, out.variant);
      out.cops = r->max_cops();
      out.robber = std::move(r);
    } else if (key == "mols-cops-classical" || key == "mols-cops-vr") {
      out.variant = key == "mols-cops-vr" ? Variant::VertexSurroundRestrictive : Variant::Classical;
      auto c = std::make_unique<MolsCops>(ag, out.variant);
      out.cops = c->cops();
      out.cop = std::move(c);
    } else if (key == "linegraph-cops-v") {
      out.variant = Variant::VertexSurround;
      auto c = std::make_unique<LineGraphCops>(ag);
      out.cops = c->cops();
      out.cop = std::move(c);
    } else if (key == "linegraph-robber-e" || key == "linegraph-robber-er") {
      out.variant = key == "linegraph-robber-e" ? Variant::EdgeSurround : Variant::EdgeSurroundRestrictive;
      auto r = std::make_unique<LineGraphRobber>(ag, out.variant);
      out.cops = r->max_cops();
      out.robber = std::move(r);
    } else if (key == "hslm-cops-classical") {
      out.variant = Variant::Classical;
      out.cops = 2;
      out.cop = std::make_unique<HslmCops>(ag);
    } else if (key == "hslm-robber-vr") {
      out.variant = Variant::VertexSurroundRestrictive;
      auto r = std::make_unique<HslmRobber>(ag);
      out.cops = r->max_cops();
      out.robber = std::move(r);
    } else {
      throw ScriptError("unknown scripted strategy '" + key + "'");
    }
  } catch (const FamilyError& e) {
    throw ScriptError(key + ": " + e.what());
  } catch (const RuleError& e) {
    throw ScriptError(key + ": " + e.what());
  }
  return out;
}

}  // namespace surround
