#pragma once

// Controllers, the match harness, transcripts and the opponent pool.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "surround/rules.hpp"
#include "surround/solver.hpp"

namespace surround {

// Raised by a controller that finds itself outside the situation its strategy
// covers. The harness turns it into an aborted match.
class StrategyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CopController {
 public:
  virtual ~CopController() = default;
  virtual std::vector<Position> place(const GameSpec& spec) = 0;
  // Cops to move; returns the new cop multiset (any order).
  virtual std::vector<Position> move(const GameSpec& spec, const Configuration& c) = 0;
  // Called after the robber's placement and each robber move.
  virtual void observe_robber(const GameSpec&, const Configuration&) {}
  virtual std::unique_ptr<CopController> clone() const = 0;
  virtual std::string name() const = 0;
  // Snapshot of internal memory for memoized exhaustive checks; empty when
  // the controller keeps no memory.
  virtual std::string memory_key() const { return {}; }
  // Free-form notes the strategy wants recorded in the transcript.
  std::vector<std::string> log;
};

class RobberController {
 public:
  virtual ~RobberController() = default;
  // nullopt: no legal placement exists.
  virtual std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) = 0;
  virtual Vertex move(const GameSpec& spec, const Configuration& c) = 0;
  virtual void observe_cops(const GameSpec&, const Configuration&) {}
  virtual std::unique_ptr<RobberController> clone() const = 0;
  virtual std::string name() const = 0;
  virtual std::string memory_key() const { return {}; }
  std::vector<std::string> log;
};

enum class Outcome { CopWin, StepLimit, Aborted };

inline std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::CopWin: return "cop-win";
    case Outcome::StepLimit: return "step-limit";
    case Outcome::Aborted: return "aborted";
  }
  return "?";
}

struct TranscriptStep {
  Side mover;
  std::vector<Position> cops;  // after the step
  Vertex robber;
};

struct Transcript {
  GameSpec spec;
  std::string cop_name, robber_name;
  std::vector<Position> cop_placement;
  std::optional<Vertex> robber_placement;
  std::vector<TranscriptStep> steps;
  Outcome outcome = Outcome::StepLimit;
  std::size_t rounds = 0;  // completed cop moves
  std::string diagnosis;
  std::vector<std::string> notes;

  bool cop_win() const { return outcome == Outcome::CopWin; }
};

// Default step limit: 4(n + k*m) rounds.
inline std::size_t default_step_limit(const GameSpec& spec) {
  return 4 * (spec.g().order() + spec.k * spec.g().size());
}

inline std::vector<Position> sorted_copy(std::span<const Position> v) {
  std::vector<Position> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  return s;
}

inline Transcript run_match(const GameSpec& spec, CopController& cops, RobberController& robber,
                            std::size_t step_limit = 0) {
  if (step_limit == 0) step_limit = default_step_limit(spec);
  Transcript t;
  t.spec = spec;
  t.cop_name = cops.name();
  t.robber_name = robber.name();
  auto finish = [&](Outcome o, std::string why = {}) {
    t.outcome = o;
    t.diagnosis = std::move(why);
    for (auto& s : cops.log) t.notes.push_back("cops: " + s);
    for (auto& s : robber.log) t.notes.push_back("robber: " + s);
    return t;
  };
  Configuration c;
  try {
    auto placed = sorted_copy(cops.place(spec));
    if (placed.size() != spec.k) return finish(Outcome::Aborted, "cop placement has wrong size");
    for (auto p : placed)
      if (p >= spec.domain_size()) return finish(Outcome::Aborted, "cop placement outside the domain");
    t.cop_placement = placed;
    c.cops = placed;
    auto rp = robber.place(spec, c.cops);
    if (!rp) {
      if (robber_placements(spec, c.cops).empty()) return finish(Outcome::CopWin, "robber has no legal placement");
      return finish(Outcome::Aborted, "robber declined to place although a legal placement exists");
    }
    auto legal = robber_placements(spec, c.cops);
    if (!std::binary_search(legal.begin(), legal.end(), *rp))
      return finish(Outcome::Aborted, "illegal robber placement " + std::to_string(*rp));
    t.robber_placement = *rp;
    c.robber = *rp;
    c.to_move = Side::Cops;
    cops.observe_robber(spec, c);
    if (is_cop_win_state(spec, c.cops, c.robber, Side::Cops)) return finish(Outcome::CopWin);
    for (std::size_t round = 0; round < step_limit; ++round) {
      auto next = sorted_copy(cops.move(spec, c));
      if (!joint_move_legal(spec, c.cops, next)) {
        std::ostringstream os;
        os << "illegal cop move in round " << round;
        return finish(Outcome::Aborted, os.str());
      }
      c.cops = next;
      c.to_move = Side::Robber;
      t.steps.push_back({Side::Cops, c.cops, c.robber});
      t.rounds = round + 1;
      robber.observe_cops(spec, c);
      if (is_cop_win_state(spec, c.cops, c.robber, Side::Robber)) return finish(Outcome::CopWin);
      Vertex to = robber.move(spec, c);
      if (!robber_move_legal(spec, c.cops, c.robber, to))
        return finish(Outcome::Aborted, "illegal robber move to " + std::to_string(to) + " in round " +
                                            std::to_string(round));
      c.robber = to;
      c.to_move = Side::Cops;
      t.steps.push_back({Side::Robber, c.cops, c.robber});
      cops.observe_robber(spec, c);
      if (is_cop_win_state(spec, c.cops, c.robber, Side::Cops)) return finish(Outcome::CopWin);
    }
  } catch (const StrategyViolation& e) {
    return finish(Outcome::Aborted, std::string("strategy violation: ") + e.what());
  } catch (const StrategyQueryError& e) {
    return finish(Outcome::Aborted, std::string("solver strategy query failed: ") + e.what());
  }
  return finish(Outcome::StepLimit);
}

// Re-checks every step of a transcript against the rules; returns the outcome
// the rules imply, or a description of the first inconsistency.
struct ReplayResult {
  bool consistent = false;
  Outcome outcome = Outcome::StepLimit;
  std::string problem;
};

inline ReplayResult replay(const Transcript& t) {
  ReplayResult r;
  const GameSpec& spec = t.spec;
  if (t.outcome == Outcome::Aborted) {
    r.consistent = true;
    r.outcome = Outcome::Aborted;
    return r;
  }
  auto bad = [&](std::string why) {
    r.consistent = false;
    r.problem = std::move(why);
    return r;
  };
  if (t.cop_placement.size() != spec.k) return bad("cop placement size");
  if (!t.robber_placement) {
    if (!robber_placements(spec, t.cop_placement).empty()) return bad("missing robber placement");
    r.consistent = t.outcome == Outcome::CopWin;
    r.outcome = Outcome::CopWin;
    return r;
  }
  Configuration c{t.cop_placement, *t.robber_placement, Side::Cops};
  auto legal = robber_placements(spec, c.cops);
  if (!std::binary_search(legal.begin(), legal.end(), c.robber)) return bad("illegal robber placement");
  Outcome implied = Outcome::StepLimit;
  if (is_cop_win_state(spec, c.cops, c.robber, Side::Cops)) implied = Outcome::CopWin;
  for (std::size_t i = 0; i < t.steps.size() && implied != Outcome::CopWin; ++i) {
    const auto& s = t.steps[i];
    Side expect = i % 2 == 0 ? Side::Cops : Side::Robber;
    if (s.mover != expect) return bad("step " + std::to_string(i) + " has the wrong mover");
    if (s.mover == Side::Cops) {
      if (s.robber != c.robber) return bad("robber moved during a cop step");
      if (!joint_move_legal(spec, c.cops, s.cops)) return bad("illegal cop move at step " + std::to_string(i));
      c.cops = s.cops;
      c.to_move = Side::Robber;
    } else {
      if (s.cops != c.cops) return bad("cops moved during a robber step");
      if (!robber_move_legal(spec, c.cops, c.robber, s.robber))
        return bad("illegal robber move at step " + std::to_string(i));
      c.robber = s.robber;
      c.to_move = Side::Cops;
    }
    if (is_cop_win_state(spec, c.cops, c.robber, c.to_move)) {
      implied = Outcome::CopWin;
      if (i + 1 != t.steps.size()) return bad("steps continue after the win");
    }
  }
  r.outcome = implied;
  r.consistent = implied == t.outcome;
  if (!r.consistent) r.problem = "recorded outcome differs from replay";
  return r;
}

inline nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json j;
  j["variant"] = std::string(variant_name(t.spec.variant));
  j["k"] = t.spec.k;
  j["cops"] = t.cop_name;
  j["robber"] = t.robber_name;
  j["cop_placement"] = t.cop_placement;
  j["robber_placement"] = t.robber_placement ? nlohmann::json(*t.robber_placement) : nlohmann::json();
  j["steps"] = nlohmann::json::array();
  for (const auto& s : t.steps)
    j["steps"].push_back({{"side", s.mover == Side::Cops ? "cops" : "robber"}, {"cops", s.cops}, {"robber", s.robber}});
  j["outcome"] = std::string(outcome_name(t.outcome));
  j["rounds"] = t.rounds;
  if (!t.diagnosis.empty()) j["diagnosis"] = t.diagnosis;
  if (!t.notes.empty()) j["notes"] = t.notes;
  return j;
}

inline Transcript transcript_from_json(const nlohmann::json& j, std::shared_ptr<const Graph> g) {
  Transcript t;
  t.spec = GameSpec(std::move(g), parse_variant(j.at("variant").get<std::string>()), j.at("k").get<std::size_t>());
  t.cop_name = j.value("cops", "");
  t.robber_name = j.value("robber", "");
  t.cop_placement = j.at("cop_placement").get<std::vector<Position>>();
  if (!j.at("robber_placement").is_null()) t.robber_placement = j.at("robber_placement").get<Vertex>();
  for (const auto& s : j.at("steps"))
    t.steps.push_back({s.at("side") == "cops" ? Side::Cops : Side::Robber, s.at("cops").get<std::vector<Position>>(),
                       s.at("robber").get<Vertex>()});
  auto o = j.at("outcome").get<std::string>();
  t.outcome = o == "cop-win" ? Outcome::CopWin : o == "aborted" ? Outcome::Aborted : Outcome::StepLimit;
  t.rounds = j.value("rounds", std::size_t{0});
  t.diagnosis = j.value("diagnosis", "");
  return t;
}

// ---------------------------------------------------------------------------
// Solver-backed controllers.

class SolverCopController : public CopController {
 public:
  explicit SolverCopController(std::shared_ptr<const SolveResult> res, bool strict = false)
      : res_(std::move(res)), strict_(strict) {}
  std::vector<Position> place(const GameSpec&) override { return res_->placement; }
  std::vector<Position> move(const GameSpec&, const Configuration& c) override {
    return solver_cop_move(*res_, c.cops, c.robber, strict_);
  }
  std::unique_ptr<CopController> clone() const override { return std::make_unique<SolverCopController>(*this); }
  std::string name() const override { return "solver-cops"; }

 private:
  std::shared_ptr<const SolveResult> res_;
  bool strict_;
};

class SolverRobberController : public RobberController {
 public:
  explicit SolverRobberController(std::shared_ptr<const SolveResult> res, bool strict = false)
      : res_(std::move(res)), strict_(strict) {}
  std::optional<Vertex> place(const GameSpec&, std::span<const Position> cops) override {
    return solver_robber_placement(*res_, cops);
  }
  Vertex move(const GameSpec&, const Configuration& c) override {
    return solver_robber_move(*res_, c.cops, c.robber, strict_);
  }
  std::unique_ptr<RobberController> clone() const override { return std::make_unique<SolverRobberController>(*this); }
  std::string name() const override { return "solver-robber"; }

 private:
  std::shared_ptr<const SolveResult> res_;
  bool strict_;
};

// ---------------------------------------------------------------------------
// Opponent pool.

namespace detail {

inline std::vector<std::size_t> dist_to_robber(const GameSpec& spec, Vertex r) { return distances_from(spec.g(), r); }

// Distance from a cop position to the robber: vertex distance, or for an edge
// the nearer endpoint.
inline std::size_t position_distance(const GameSpec& spec, const std::vector<std::size_t>& dist, Position p) {
  if (!on_edges(spec.variant)) return dist[p];
  auto e = spec.g().edge(p);
  return std::min(dist[e.u], dist[e.v]);
}

}  // namespace detail

class RandomCops : public CopController {
 public:
  explicit RandomCops(std::uint64_t seed) : rng_(seed), seed_(seed) {}
  std::vector<Position> place(const GameSpec& spec) override {
    std::uniform_int_distribution<Position> pick(0, static_cast<Position>(spec.domain_size() - 1));
    std::vector<Position> out(spec.k);
    for (auto& p : out) p = pick(rng_);
    return out;
  }
  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    std::vector<Position> out;
    for (auto p : c.cops) {
      auto m = cop_moves_from(spec, p);
      out.push_back(m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng_)]);
    }
    return out;
  }
  std::unique_ptr<CopController> clone() const override { return std::make_unique<RandomCops>(*this); }
  std::string name() const override { return "random-cops(" + std::to_string(seed_) + ")"; }

 private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
};

// Each cop steps to a move minimizing its own distance to the robber; ties
// broken at random so that a pool of seeds behaves differently.
class GreedyCops : public CopController {
 public:
  explicit GreedyCops(std::uint64_t seed) : rng_(seed), seed_(seed) {}
  std::vector<Position> place(const GameSpec& spec) override {
    std::uniform_int_distribution<Position> pick(0, static_cast<Position>(spec.domain_size() - 1));
    std::vector<Position> out(spec.k);
    for (auto& p : out) p = pick(rng_);
    return out;
  }
  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override {
    auto dist = detail::dist_to_robber(spec, c.robber);
    std::vector<Position> out;
    for (auto p : c.cops) {
      auto m = cop_moves_from(spec, p);
      std::size_t best = kUnreachable;
      std::vector<Position> ties;
      for (auto q : m) {
        auto d = detail::position_distance(spec, dist, q);
        if (d < best) {
          best = d;
          ties.assign(1, q);
        } else if (d == best) {
          ties.push_back(q);
        }
      }
      out.push_back(ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng_)]);
    }
    return out;
  }
  std::unique_ptr<CopController> clone() const override { return std::make_unique<GreedyCops>(*this); }
  std::string name() const override { return "greedy-cops(" + std::to_string(seed_) + ")"; }

 private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
};

class StationaryCops : public CopController {
 public:
  std::vector<Position> place(const GameSpec& spec) override { return std::vector<Position>(spec.k, 0); }
  std::vector<Position> move(const GameSpec&, const Configuration& c) override { return c.cops; }
  std::unique_ptr<CopController> clone() const override { return std::make_unique<StationaryCops>(*this); }
  std::string name() const override { return "stationary-cops"; }
};

// Fixed placement, then delegates to another controller.
class PlacedCops : public CopController {
 public:
  PlacedCops(std::vector<Position> placement, std::unique_ptr<CopController> inner)
      : placement_(std::move(placement)), inner_(std::move(inner)) {}
  PlacedCops(const PlacedCops& o) : CopController(o), placement_(o.placement_), inner_(o.inner_->clone()) {}
  std::vector<Position> place(const GameSpec&) override { return placement_; }
  std::vector<Position> move(const GameSpec& spec, const Configuration& c) override { return inner_->move(spec, c); }
  std::unique_ptr<CopController> clone() const override { return std::make_unique<PlacedCops>(*this); }
  std::string name() const override { return inner_->name() + "@placed"; }

 private:
  std::vector<Position> placement_;
  std::unique_ptr<CopController> inner_;
};

class RandomRobber : public RobberController {
 public:
  explicit RandomRobber(std::uint64_t seed) : rng_(seed), seed_(seed) {}
  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    auto opts = robber_placements(spec, cops);
    if (opts.empty()) return std::nullopt;
    return opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng_)];
  }
  Vertex move(const GameSpec& spec, const Configuration& c) override {
    auto opts = robber_moves(spec, c.cops, c.robber);
    if (opts.empty()) throw StrategyViolation("random robber has no legal move");
    return opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng_)];
  }
  std::unique_ptr<RobberController> clone() const override { return std::make_unique<RandomRobber>(*this); }
  std::string name() const override { return "random-robber(" + std::to_string(seed_) + ")"; }

 private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
};

// Maximizes the minimum cop distance; prefers moves that are not immediately
// surrounded. Ties broken at random.
class GreedyRobber : public RobberController {
 public:
  explicit GreedyRobber(std::uint64_t seed) : rng_(seed), seed_(seed) {}
  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    return best(spec, cops, robber_placements(spec, cops));
  }
  Vertex move(const GameSpec& spec, const Configuration& c) override {
    auto opts = robber_moves(spec, c.cops, c.robber);
    if (opts.empty()) throw StrategyViolation("greedy robber has no legal move");
    return *best(spec, c.cops, opts);
  }
  std::unique_ptr<RobberController> clone() const override { return std::make_unique<GreedyRobber>(*this); }
  std::string name() const override { return "greedy-robber(" + std::to_string(seed_) + ")"; }

 private:
  std::optional<Vertex> best(const GameSpec& spec, std::span<const Position> cops, const std::vector<Vertex>& opts) {
    if (opts.empty()) return std::nullopt;
    std::vector<Vertex> ties;
    std::pair<int, std::size_t> top{-1, 0};
    for (auto v : opts) {
      auto dist = distances_from(spec.g(), v);
      std::size_t nearest = kUnreachable;
      for (auto p : cops) nearest = std::min(nearest, detail::position_distance(spec, dist, p));
      std::pair<int, std::size_t> score{is_surrounded(spec, cops, v) ? 0 : 1, nearest};
      if (score > top) {
        top = score;
        ties.assign(1, v);
      } else if (score == top) {
        ties.push_back(v);
      }
    }
    return ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng_)];
  }
  std::mt19937_64 rng_;
  std::uint64_t seed_;
};

// Starts on a vertex of maximum degree (smallest index) and never moves when
// allowed to stay.
class StationaryRobber : public RobberController {
 public:
  std::optional<Vertex> place(const GameSpec& spec, std::span<const Position> cops) override {
    auto opts = robber_placements(spec, cops);
    if (opts.empty()) return std::nullopt;
    return *std::max_element(opts.begin(), opts.end(), [&](Vertex a, Vertex b) {
      auto da = spec.g().degree(a), db = spec.g().degree(b);
      return da < db || (da == db && a > b);
    });
  }
  Vertex move(const GameSpec& spec, const Configuration& c) override {
    auto opts = robber_moves(spec, c.cops, c.robber);
    if (opts.empty()) throw StrategyViolation("stationary robber has no legal move");
    if (std::binary_search(opts.begin(), opts.end(), c.robber)) return c.robber;
    return opts.front();
  }
  std::unique_ptr<RobberController> clone() const override { return std::make_unique<StationaryRobber>(*this); }
  std::string name() const override { return "stationary-robber"; }
};

class AdversaryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::unique_ptr<CopController> cop_adversary(const std::string& kind, std::uint64_t seed) {
  if (kind == "random") return std::make_unique<RandomCops>(seed);
  if (kind == "greedy-distance" || kind == "greedy") return std::make_unique<GreedyCops>(seed);
  if (kind == "stationary") return std::make_unique<StationaryCops>();
  throw AdversaryError("unknown adversary kind '" + kind + "' (expected random, greedy-distance, stationary)");
}

inline std::unique_ptr<RobberController> robber_adversary(const std::string& kind, std::uint64_t seed) {
  if (kind == "random") return std::make_unique<RandomRobber>(seed);
  if (kind == "greedy-distance" || kind == "greedy") return std::make_unique<GreedyRobber>(seed);
  if (kind == "stationary") return std::make_unique<StationaryRobber>();
  throw AdversaryError("unknown adversary kind '" + kind + "' (expected random, greedy-distance, stationary)");
}

// ---------------------------------------------------------------------------
// Exhaustive check of a cop controller: explores every robber placement and
// every robber reply. Fails on a robber escape (a repeated state along a line
// of play), on exceeding `max_rounds`, or on an illegal or aborted cop move.

struct ExhaustiveReport {
  bool cop_always_wins = false;
  std::size_t worst_rounds = 0;
  std::size_t nodes = 0;
  std::string failure;
};

inline ExhaustiveReport verify_cops_exhaustively(const GameSpec& spec, const CopController& proto,
                                                 std::size_t max_rounds, std::size_t node_limit = 5'000'000) {
  ExhaustiveReport rep;
  auto start = proto.clone();
  std::vector<Position> placed;
  try {
    placed = sorted_copy(start->place(spec));
  } catch (const std::exception& e) {
    rep.failure = std::string("placement failed: ") + e.what();
    return rep;
  }
  if (placed.size() != spec.k) {
    rep.failure = "placement has wrong size";
    return rep;
  }
  // Memo of cop-to-move states (with controller memory) proven won, with the
  // worst-case remaining rounds.
  std::map<std::string, std::size_t> done;
  std::set<std::string> on_path;
  auto key_of = [&](const Configuration& c, const CopController& ctl) {
    std::string k = std::to_string(c.robber) + "|";
    for (auto p : c.cops) k += std::to_string(p) + ",";
    return k + "|" + ctl.memory_key();
  };
  // Returns worst-case rounds to win from a cop-to-move state, or nullopt.
  std::function<std::optional<std::size_t>(const Configuration&, CopController&, std::size_t)> solve_from;
  solve_from = [&](const Configuration& c, CopController& ctl, std::size_t depth) -> std::optional<std::size_t> {
    if (++rep.nodes > node_limit) {
      rep.failure = "node limit reached";
      return std::nullopt;
    }
    if (is_cop_win_state(spec, c.cops, c.robber, Side::Cops)) return 0;
    if (depth >= max_rounds) {
      rep.failure = "round limit reached";
      return std::nullopt;
    }
    const std::string key = key_of(c, ctl);
    if (auto it = done.find(key); it != done.end()) return it->second;
    if (on_path.count(key)) {
      rep.failure = "robber can repeat a position (cop controller loops)";
      return std::nullopt;
    }
    on_path.insert(key);
    std::vector<Position> next;
    try {
      next = sorted_copy(ctl.move(spec, c));
    } catch (const std::exception& e) {
      rep.failure = std::string("cop controller aborted: ") + e.what();
      return std::nullopt;
    }
    if (!joint_move_legal(spec, c.cops, next)) {
      rep.failure = "illegal cop move";
      return std::nullopt;
    }
    std::size_t worst = 1;
    if (!is_cop_win_state(spec, next, c.robber, Side::Robber)) {
      for (auto to : robber_moves(spec, next, c.robber)) {
        auto branch = ctl.clone();
        Configuration c2{next, to, Side::Cops};
        branch->observe_robber(spec, c2);
        auto sub = solve_from(c2, *branch, depth + 1);
        if (!sub) return std::nullopt;
        worst = std::max(worst, *sub + 1);
      }
    }
    on_path.erase(key);
    done[key] = worst;
    return worst;
  };
  for (auto r : robber_placements(spec, placed)) {
    auto ctl = start->clone();
    Configuration c{placed, r, Side::Cops};
    ctl->observe_robber(spec, c);
    auto res = solve_from(c, *ctl, 0);
    if (!res) return rep;
    rep.worst_rounds = std::max(rep.worst_rounds, *res);
  }
  rep.cop_always_wins = true;
  return rep;
}

// Exhaustive check of a robber controller: every cop placement and every cop
// joint move. Fails as soon as some line of cop play wins or the controller
// aborts or moves illegally.
struct RobberExhaustiveReport {
  bool robber_always_survives = false;
  std::size_t states = 0;
  std::string failure;
};

inline RobberExhaustiveReport verify_robber_exhaustively(const GameSpec& spec, const RobberController& proto,
                                                         std::size_t node_limit = 5'000'000) {
  RobberExhaustiveReport rep;
  struct Node {
    std::vector<Position> cops;
    Vertex robber;
    std::unique_ptr<RobberController> ctl;
  };
  std::set<std::string> seen;
  std::vector<Node> stack;
  auto describe = [](std::span<const Position> cops, Vertex r) {
    std::string s = "cops {";
    for (auto p : cops) s += std::to_string(p) + " ";
    return s + "} robber " + std::to_string(r);
  };
  auto push = [&](std::vector<Position> cops, Vertex r, std::unique_ptr<RobberController> ctl) {
    std::string key = std::to_string(r) + "|";
    for (auto p : cops) key += std::to_string(p) + ",";
    key += "|" + ctl->memory_key();
    if (seen.insert(key).second) stack.push_back({std::move(cops), r, std::move(ctl)});
  };
  bool ok = true;
  for_each_cop_placement(spec, [&](std::span<const std::uint32_t> cp) {
    if (!ok) return;
    std::vector<Position> cops(cp.begin(), cp.end());
    auto ctl = proto.clone();
    std::optional<Vertex> rp;
    try {
      rp = ctl->place(spec, cops);
    } catch (const std::exception& e) {
      rep.failure = std::string("placement aborted: ") + e.what();
      ok = false;
      return;
    }
    auto legal = robber_placements(spec, cops);
    if (!rp || !std::binary_search(legal.begin(), legal.end(), *rp)) {
      rep.failure = "no legal placement against " + describe(cops, 0);
      ok = false;
      return;
    }
    if (is_cop_win_state(spec, cops, *rp, Side::Cops)) {
      rep.failure = "caught at placement: " + describe(cops, *rp);
      ok = false;
      return;
    }
    push(std::move(cops), *rp, std::move(ctl));
  });
  while (ok && !stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (++rep.states > node_limit) {
      rep.failure = "node limit reached";
      return rep;
    }
    for (auto& next : cop_joint_moves(spec, node.cops)) {
      if (is_cop_win_state(spec, next, node.robber, Side::Robber)) {
        rep.failure = "cops win by moving to " + describe(next, node.robber);
        return rep;
      }
      auto ctl = node.ctl->clone();
      Configuration c{next, node.robber, Side::Robber};
      Vertex to;
      try {
        ctl->observe_cops(spec, c);
        to = ctl->move(spec, c);
      } catch (const std::exception& e) {
        rep.failure = std::string("robber aborted at ") + describe(next, node.robber) + ": " + e.what();
        return rep;
      }
      if (!robber_move_legal(spec, next, node.robber, to)) {
        rep.failure = "illegal robber move at " + describe(next, node.robber);
        return rep;
      }
      if (is_cop_win_state(spec, next, to, Side::Cops)) {
        rep.failure = "robber walked into a capture at " + describe(next, to);
        return rep;
      }
      push(std::move(next), to, std::move(ctl));
    }
  }
  rep.robber_always_survives = ok;
  return rep;
}

}  // namespace surround
