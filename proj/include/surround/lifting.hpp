#pragma once

// Strategy lifting: a winning cop controller for one variant becomes a
// controller for another by letting groups of cops simulate each source cop.
//
//   vertex-r -> vertex   groups of Δ on the source vertex; a robber standing on
//                        a group makes it spread to his neighbors
//   edge-r   -> edge     groups of Δ on the source edge; crossing a group's
//                        edge makes it spread to the edges at the arrival vertex
//   edge     -> vertex   two cops on the endpoints of the source edge
//   edge-r   -> vertex-r same as above
//   vertex   -> edge     groups of Δ on an edge at the source vertex; one
//                        finishing move after the source surround
//   vertex-r -> edge-r   same, plus spreading when the robber stands where the
//                        source game forbids him to

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surround/match.hpp"
#include "surround/rules.hpp"

namespace surround {

class LiftError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LiftKind { Spread, Pair, Shadow };

inline std::optional<LiftKind> lift_kind(Variant from, Variant to) {
  using V = Variant;
  if ((from == V::VertexSurroundRestrictive && to == V::VertexSurround) ||
      (from == V::EdgeSurroundRestrictive && to == V::EdgeSurround))
    return LiftKind::Spread;
  if ((from == V::EdgeSurround && to == V::VertexSurround) ||
      (from == V::EdgeSurroundRestrictive && to == V::VertexSurroundRestrictive))
    return LiftKind::Pair;
  if ((from == V::VertexSurround && to == V::EdgeSurround) ||
      (from == V::VertexSurroundRestrictive && to == V::EdgeSurroundRestrictive))
    return LiftKind::Shadow;
  return std::nullopt;
}

inline const std::vector<std::pair<Variant, Variant>>& lift_pairs() {
  static const std::vector<std::pair<Variant, Variant>> pairs{
      {Variant::VertexSurroundRestrictive, Variant::VertexSurround},
      {Variant::EdgeSurroundRestrictive, Variant::EdgeSurround},
      {Variant::EdgeSurround, Variant::VertexSurround},
      {Variant::EdgeSurroundRestrictive, Variant::VertexSurroundRestrictive},
      {Variant::VertexSurround, Variant::EdgeSurround},
      {Variant::VertexSurroundRestrictive, Variant::EdgeSurroundRestrictive}};
  return pairs;
}

inline std::size_t lifted_cop_count(const Graph& g, Variant from, Variant to, std::size_t k) {
  auto kind = lift_kind(from, to);
  if (!kind)
    throw LiftError("unsupported pair " + std::string(variant_name(from)) + " -> " + std::string(variant_name(to)));
  return *kind == LiftKind::Pair ? 2 * k : k * max_degree(g);
}

// Moves the cops listed in `movers` (indices into `cops`) so that every target
// position holds at least one of them; other cops stay. Returns nullopt when no
// one-step assignment exists.
inline std::optional<std::vector<Position>> cover_targets(const GameSpec& spec, const std::vector<Position>& cops,
                                                          const std::vector<std::size_t>& movers,
                                                          const std::vector<Position>& targets) {
  const std::size_t t = targets.size();
  std::vector<std::size_t> owner(t, movers.size());  // target -> mover slot
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t ti) -> bool {
    for (std::size_t mi = 0; mi < movers.size(); ++mi) {
      if (seen[mi] || !cop_move_legal(spec, cops[movers[mi]], targets[ti])) continue;
      seen[mi] = 1;
      auto held = std::find(owner.begin(), owner.end(), mi);
      if (held == owner.end()) {
        owner[ti] = mi;
        return true;
      }
      std::size_t other = static_cast<std::size_t>(held - owner.begin());
      owner[other] = movers.size();
      if (self(self, other)) {
        owner[ti] = mi;
        return true;
      }
      owner[other] = mi;
    }
    return false;
  };
  for (std::size_t ti = 0; ti < t; ++ti) {
    seen.assign(movers.size(), 0);
    if (!augment(augment, ti)) return std::nullopt;
  }
  auto out = cops;
  for (std::size_t ti = 0; ti < t; ++ti) out[movers[owner[ti]]] = targets[ti];
  return out;
}

inline std::vector<Position> surround_targets(const GameSpec& spec, Vertex v) {
  if (on_edges(spec.variant)) {
    auto inc = spec.g().incident_edges(v);
    std::vector<Position> out(inc.begin(), inc.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  auto nb = spec.g().neighbors(v);
  return {nb.begin(), nb.end()};
}

class LiftedCops : public CopController {
 public:
  LiftedCops(std::unique_ptr<CopController> source, GameSpec source_spec, Variant target)
      : source_(std::move(source)), src_spec_(std::move(source_spec)), target_(target) {
    auto kind = lift_kind(src_spec_.variant, target_);
    if (!kind)
      throw LiftError("unsupported pair " + std::string(variant_name(src_spec_.variant)) + " -> " +
                      std::string(variant_name(target_)));
    kind_ = *kind;
    group_size_ = kind_ == LiftKind::Pair ? 2 : max_degree(src_spec_.g());
  }
  LiftedCops(const LiftedCops& o)
      : CopController(o),
        source_(o.source_->clone()),
        src_spec_(o.src_spec_),
        target_(o.target_),
        kind_(o.kind_),
        group_size_(o.group_size_),
        groups_(o.groups_),
        sim_(o.sim_),
        robber_(o.robber_),
        robber_prev_(o.robber_prev_),
        started_(o.started_),
        moved_(o.moved_),
        finishing_(o.finishing_),
        surround_at_(o.surround_at_) {}

  std::size_t cops_needed() const { return src_spec_.k * group_size_; }
  GameSpec target_spec() const { return GameSpec(src_spec_.graph, target_, cops_needed()); }

  std::vector<Position> place(const GameSpec& spec) override {
    check_spec(spec);
    sim_ = sorted_copy(source_->place(src_spec_));
    groups_.assign(sim_.size(), {});
    for (std::size_t i = 0; i < sim_.size(); ++i) groups_[i] = image_of(sim_[i]);
    return flat();
  }

  void observe_robber(const GameSpec&, const Configuration& c) override {
    robber_prev_ = started_ ? robber_ : c.robber;
    robber_ = c.robber;
    const bool placement = !started_;
    started_ = true;
    if (!finishing_ && !offending_group_impl(robber_prev_, robber_, placement))
      source_->observe_robber(src_spec_, sim_config());
  }

  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    check_spec(spec);
    if (sorted_copy(flat()) != c.cops) throw StrategyViolation("lifted cops: positions differ from the controller's record");
    const Vertex r = c.robber;
    // The robber did something the source game forbids: the group he ran into
    // surrounds him now.
    if (auto g = offending_group_impl(robber_prev_, r, robber_prev_ == r && !moved_)) return spread_group(spec, *g, r);
    if (finishing_) return finish(spec, r);
    // Source game: the robber made a legal move there too.
    auto next = sorted_copy(source_->move(src_spec_, sim_config()));
    auto assign = match_joint_move(src_spec_, sim_, next);
    if (!assign) throw StrategyViolation("lifted cops: source controller made an illegal move");
    std::vector<std::vector<Position>> moved(groups_.size());
    for (std::size_t i = 0; i < sim_.size(); ++i) moved[(*assign)[i]] = follow(groups_[i], sim_[i], next[(*assign)[i]]);
    groups_ = std::move(moved);
    sim_ = next;
    if (kind_ == LiftKind::Shadow && is_cop_win_state(src_spec_, sim_, r, Side::Robber)) {
      finishing_ = true;
      surround_at_ = r;
      log.push_back("source surround at " + std::to_string(r) + "; finishing next turn");
    }
    moved_ = true;
    return flat();
  }

  std::unique_ptr<CopController> clone() const override { return std::make_unique<LiftedCops>(*this); }
  std::string name() const override {
    return "lift(" + std::string(variant_name(src_spec_.variant)) + "->" + std::string(variant_name(target_)) + "," +
           source_->name() + ")";
  }
  std::string memory_key() const override {
    std::ostringstream os;
    for (const auto& g : groups_) {
      for (auto p : g) os << p << ',';
      os << '/';
    }
    os << '|' << robber_prev_ << '|' << started_ << moved_ << finishing_ << '|' << surround_at_ << '|' << source_->memory_key();
    return os.str();
  }

 private:
  void check_spec(const GameSpec& spec) const {
    if (spec.variant != target_ || spec.k != cops_needed())
      throw StrategyViolation("lifted cops: game spec does not match the lift (need " + std::to_string(cops_needed()) +
                              " cops in " + std::string(variant_name(target_)) + ")");
  }

  Configuration sim_config() const { return Configuration{sim_, robber_, Side::Cops}; }

  // Real positions that stand in for one source cop at p.
  std::vector<Position> image_of(Position p) const {
    const Graph& g = src_spec_.g();
    switch (kind_) {
      case LiftKind::Spread: return std::vector<Position>(group_size_, p);
      case LiftKind::Pair: {
        auto e = g.edge(p);
        return {e.u, e.v};
      }
      case LiftKind::Shadow: {
        auto inc = g.incident_edges(p);
        return std::vector<Position>(group_size_, *std::min_element(inc.begin(), inc.end()));
      }
    }
    return {};
  }

  // Group positions after its source cop steps from `from` to `to`.
  std::vector<Position> follow(const std::vector<Position>& group, Position from, Position to) const {
    const Graph& g = src_spec_.g();
    switch (kind_) {
      case LiftKind::Spread: return std::vector<Position>(group.size(), to);
      case LiftKind::Pair: {
        // Old edge {x,y}, new edge {u,v}: each endpoint cop steps onto an
        // endpoint of the new edge.
        auto e = g.edge(to);
        Position x = group[0], y = group[1];
        auto ok = [&](Position a, Position b) { return a == b || g.adjacent(a, b); };
        if (ok(x, e.u) && ok(y, e.v)) return {e.u, e.v};
        if (ok(x, e.v) && ok(y, e.u)) return {e.v, e.u};
        throw StrategyViolation("lifted cops: endpoint pair cannot follow its edge cop");
      }
      case LiftKind::Shadow: {
        if (from == to) return group;
        auto e = g.edge_between(from, to);
        if (!e) throw StrategyViolation("lifted cops: source vertex cop jumped");
        return std::vector<Position>(group.size(), *e);
      }
    }
    return group;
  }

  void set_flat(const std::vector<Position>& flat_pos) {
    std::size_t t = 0;
    for (auto& g : groups_)
      for (auto& p : g) p = flat_pos[t++];
  }

  std::vector<Position> flat() const {
    std::vector<Position> out;
    for (const auto& g : groups_) out.insert(out.end(), g.begin(), g.end());
    return out;
  }

  // Whether the robber's last step from `from` to `to` is one the source
  // game forbids; `placement` marks the initial placement.
  std::optional<std::size_t> offending_group_impl(Vertex from, Vertex to, bool placement) const {
    const Graph& g = src_spec_.g();
    switch (src_spec_.variant) {
      case Variant::VertexSurroundRestrictive:
        if (kind_ == LiftKind::Pair) return std::nullopt;
        for (std::size_t i = 0; i < sim_.size(); ++i)
          if (sim_[i] == to) return i;
        return std::nullopt;
      case Variant::EdgeSurroundRestrictive: {
        if (kind_ != LiftKind::Spread || placement || from == to) return std::nullopt;
        auto e = g.edge_between(from, to);
        if (!e) return std::nullopt;
        for (std::size_t i = 0; i < sim_.size(); ++i)
          if (sim_[i] == *e) return i;
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  std::vector<std::size_t> group_slots(std::size_t gi, std::vector<Position>& flat_out) const {
    std::vector<std::size_t> slots;
    flat_out.clear();
    for (std::size_t i = 0; i < groups_.size(); ++i)
      for (auto p : groups_[i]) {
        if (i == gi) slots.push_back(flat_out.size());
        flat_out.push_back(p);
      }
    return slots;
  }

  std::vector<Position> spread_group(const GameSpec& spec, std::size_t gi, Vertex v) {
    std::vector<Position> cur;
    auto slots = group_slots(gi, cur);
    auto out = cover_targets(spec, cur, slots, surround_targets(spec, v));
    if (!out) throw StrategyViolation("lifted cops: group cannot spread around vertex " + std::to_string(v));
    log.push_back("group " + std::to_string(gi) + " spreads around " + std::to_string(v));
    set_flat(*out);
    return *out;
  }

  // After the simulated vertex cops surrounded the robber at surround_at_.
  std::vector<Position> finish(const GameSpec& spec, Vertex r) {
    std::vector<Position> cur;
    if (r == surround_at_) {
      group_slots(groups_.size(), cur);
      std::vector<std::size_t> all(cur.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      auto out = cover_targets(spec, cur, all, surround_targets(spec, r));
      if (!out) throw StrategyViolation("lifted cops: cannot close the surround at " + std::to_string(r));
      set_flat(*out);
      return *out;
    }
    // Robber stepped to a neighbor: the group whose edge touches it spreads.
    const Graph& g = spec.g();
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      auto e = g.edge(groups_[i].front());
      if (e.u == r || e.v == r) return spread_group(spec, i, r);
    }
    throw StrategyViolation("lifted cops: no group next to the robber after the source surround");
  }

  std::unique_ptr<CopController> source_;
  GameSpec src_spec_;
  Variant target_;
  LiftKind kind_ = LiftKind::Spread;
  std::size_t group_size_ = 1;
  std::vector<std::vector<Position>> groups_;
  std::vector<Position> sim_;
  Vertex robber_ = 0;
  Vertex robber_prev_ = 0;
  bool started_ = false;
  bool moved_ = false;
  bool finishing_ = false;
  Vertex surround_at_ = 0;
};

// Source controller plays `source_spec`; the result plays the same graph in
// `target` with the lifted number of cops.
inline std::unique_ptr<LiftedCops> lift_strategy(std::unique_ptr<CopController> source, const GameSpec& source_spec,
                                                 Variant target) {
  return std::make_unique<LiftedCops>(std::move(source), source_spec, target);
}

}  // namespace surround
