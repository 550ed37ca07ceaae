#pragma once

// Exact solver: retrograde analysis over canonical game states.
//
// States are (cop multiset, robber vertex, side to move). A joint cop move is
// split into k single-cop steps so that predecessors can be enumerated one cop
// at a time: the intermediate node (moved, unmoved, r) records which cops have
// already stepped, and the next cop to step is always the smallest unmoved
// position. Layer 0 is the cop-to-move states, layer k the robber-to-move
// states; only the layers in between are kept as plain bitmaps.
//
// Ranks count half-moves to the win under optimal play: terminal robber-to-move
// states have rank 0, a cop-to-move state has rank one more than its best
// successor, a robber-to-move state one more than its worst.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "surround/graph.hpp"
#include "surround/multiset.hpp"
#include "surround/rules.hpp"

namespace surround {

enum class Verdict { CopWin, RobberWin };

inline std::string_view verdict_name(Verdict v) { return v == Verdict::CopWin ? "cop-win" : "robber-win"; }

struct SolveOptions {
  std::uint64_t budget = 200'000'000;  // cop- plus robber-to-move states
  std::size_t workers = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t need, std::uint64_t limit, const std::string& what)
      : std::runtime_error("state budget exceeded: " + what + " needs " + std::to_string(need) + " > " +
                           std::to_string(limit)),
        required(need),
        budget(limit) {}
  std::uint64_t required;
  std::uint64_t budget;
};

struct SolveStats {
  std::uint64_t states = 0;
  std::uint64_t intermediate_nodes = 0;
  std::uint64_t transitions = 0;
  std::uint32_t plies = 0;
  double seconds = 0;
};

inline constexpr std::uint16_t kUnsetRank = 0xFFFF;

class SolveResult {
 public:
  GameSpec spec;
  Verdict verdict = Verdict::RobberWin;
  // Chosen cop placement: best worst-case rank when the cops win, fewest safe
  // robber starts otherwise; ties go to the lexicographically smallest.
  std::vector<Position> placement;
  std::uint32_t placement_rank = 0;  // worst case over robber starts, CopWin only
  SolveStats stats;

  std::uint64_t cop_multisets() const { return multisets_; }
  std::uint64_t num_states() const { return 2 * multisets_ * n_; }
  const MultisetCodec& codec() const { return codec_; }

  std::uint64_t index(std::span<const Position> cops, Vertex r, Side side) const {
    return (static_cast<std::uint64_t>(side) * multisets_ + codec_.rank(cops)) * n_ + r;
  }
  std::uint64_t index(const Configuration& c) const { return index(c.cops, c.robber, c.to_move); }

  Configuration decode(std::uint64_t idx) const {
    Configuration c;
    c.robber = static_cast<Vertex>(idx % n_);
    std::uint64_t q = idx / n_;
    c.to_move = q >= multisets_ ? Side::Robber : Side::Cops;
    c.cops = codec_.unrank(q % multisets_, spec.k);
    return c;
  }

  bool won(std::uint64_t idx) const { return ranks_[idx] != kUnsetRank; }
  bool won(std::span<const Position> cops, Vertex r, Side side) const { return won(index(cops, r, side)); }
  std::optional<std::uint32_t> rank(std::uint64_t idx) const {
    if (ranks_[idx] == kUnsetRank) return std::nullopt;
    return ranks_[idx];
  }
  std::optional<std::uint32_t> rank(std::span<const Position> cops, Vertex r, Side side) const {
    return rank(index(cops, r, side));
  }

  std::vector<bool> winning_set() const {
    std::vector<bool> out(ranks_.size());
    for (std::size_t i = 0; i < ranks_.size(); ++i) out[i] = ranks_[i] != kUnsetRank;
    return out;
  }
  std::uint64_t winning_count() const {
    return static_cast<std::uint64_t>(std::count_if(ranks_.begin(), ranks_.end(), [](auto x) { return x != kUnsetRank; }));
  }

 private:
  friend class Retrograde;
  MultisetCodec codec_;
  std::uint64_t multisets_ = 0;
  std::uint64_t n_ = 0;
  std::vector<std::uint16_t> ranks_;
};

// Total cop- plus robber-to-move states for a spec; throws on overflow.
inline std::uint64_t state_count(const GameSpec& spec) {
  MultisetCodec codec(spec.domain_size(), spec.k);
  std::uint64_t m = codec.count(spec.k);
  std::uint64_t n = spec.g().order();
  if (m > std::numeric_limits<std::uint64_t>::max() / (2 * n)) throw std::overflow_error("state count overflows");
  return 2 * m * n;
}

// Per-position move lists (stay first is not guaranteed; lists are ascending).
struct MoveTable {
  std::vector<std::size_t> offset;
  std::vector<Position> to;

  explicit MoveTable(const GameSpec& spec) {
    const std::size_t d = spec.domain_size();
    offset.assign(d + 1, 0);
    for (Position p = 0; p < d; ++p) {
      auto m = cop_moves_from(spec, p);
      to.insert(to.end(), m.begin(), m.end());
      offset[p + 1] = to.size();
    }
  }
  std::span<const Position> operator[](Position p) const { return {to.data() + offset[p], to.data() + offset[p + 1]}; }
};

class Retrograde {
 public:
  Retrograde(const GameSpec& spec, const SolveOptions& opts) : spec_(spec), opts_(opts), moves_(spec) {}

  SolveResult run() {
    auto t0 = std::chrono::steady_clock::now();
    const std::size_t k = spec_.k;
    const std::uint64_t need = state_count(spec_);
    if (need > opts_.budget) throw BudgetExceeded(need, opts_.budget, "k=" + std::to_string(k));
    res_.spec = spec_;
    res_.codec_ = MultisetCodec(spec_.domain_size(), k);
    codec_ = &res_.codec_;
    res_.multisets_ = codec_->count(k);
    res_.n_ = spec_.g().order();
    n_ = res_.n_;
    M_ = res_.multisets_;

    std::uint64_t inter_bits = 0;
    layer_.resize(k + 1);
    for (std::size_t j = 1; j < k; ++j) {
      std::uint64_t sz = codec_->count(j) * codec_->count(k - j) * n_;
      inter_bits += sz;
      if (inter_bits > 8 * opts_.budget) throw BudgetExceeded(inter_bits, 8 * opts_.budget, "intermediate layers");
    }
    for (std::size_t j = 1; j < k; ++j) layer_[j].assign((codec_->count(j) * codec_->count(k - j) * n_ + 63) / 64, 0);
    res_.ranks_.assign(2 * M_ * n_, kUnsetRank);
    counters_.assign(M_ * n_, 0);

    std::vector<std::uint64_t> cop_front, rob_front;
    initialize(cop_front, rob_front);

    std::uint32_t t = 0;
    while (!cop_front.empty() || !rob_front.empty()) {
      if (t + 1 >= kUnsetRank) throw std::overflow_error("solver: rank exceeds 16 bits");
      std::vector<std::uint64_t> next_cop, next_rob;
      propagate_cop_side(rob_front, static_cast<std::uint16_t>(t + 1), next_cop);
      propagate_robber_side(cop_front, static_cast<std::uint16_t>(t + 1), next_rob);
      cop_front.swap(next_cop);
      rob_front.swap(next_rob);
      ++t;
    }
    res_.stats.plies = t;
    for (auto& l : layer_) {
      for (auto w : l) res_.stats.intermediate_nodes += static_cast<std::uint64_t>(std::popcount(w));
      l.clear();
      l.shrink_to_fit();
    }
    counters_.clear();
    counters_.shrink_to_fit();
    res_.stats.states = 2 * M_ * n_;
    decide_placement();
    res_.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::move(res_);
  }

 private:
  std::uint64_t cop_index(std::uint64_t crank, Vertex r) const { return crank * n_ + r; }
  std::uint64_t robber_index(std::uint64_t crank, Vertex r) const { return (M_ + crank) * n_ + r; }

  // Fills terminal ranks and robber move counters, split over workers by
  // cop-multiset range. Frontiers are concatenated in range order so the
  // outcome does not depend on the worker count.
  void initialize(std::vector<std::uint64_t>& cop_front, std::vector<std::uint64_t>& rob_front) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opts_.workers, 64));
    std::vector<std::vector<std::uint64_t>> cf(workers), rf(workers);
    auto work = [&](std::size_t w) {
      const std::uint64_t lo = M_ * w / workers, hi = M_ * (w + 1) / workers;
      const Graph& g = spec_.g();
      const Variant var = spec_.variant;
      std::vector<std::uint32_t> cops(spec_.k);
      std::vector<char> occ(spec_.domain_size(), 0);
      for (std::uint64_t c = lo; c < hi; ++c) {
        codec_->unrank(c, spec_.k, cops.data());
        for (auto p : cops) occ[p] = 1;
        for (Vertex r = 0; r < n_; ++r) {
          auto nb = g.neighbors(r);
          auto inc = g.incident_edges(r);
          bool terminal = false;
          std::size_t legal = 0;
          switch (var) {
            case Variant::Classical:
              terminal = occ[r];
              legal = nb.size() + 1;
              break;
            case Variant::VertexSurround:
              terminal = std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return occ[x]; });
              legal = nb.size() + 1;
              break;
            case Variant::VertexSurroundRestrictive:
              terminal = std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return occ[x]; });
              legal = (occ[r] ? 0 : 1) + static_cast<std::size_t>(std::count_if(nb.begin(), nb.end(), [&](Vertex x) { return !occ[x]; }));
              terminal = terminal || legal == 0;
              break;
            case Variant::EdgeSurround:
              terminal = std::all_of(inc.begin(), inc.end(), [&](EdgeId e) { return occ[e]; });
              legal = nb.size() + 1;
              break;
            case Variant::EdgeSurroundRestrictive:
              terminal = std::all_of(inc.begin(), inc.end(), [&](EdgeId e) { return occ[e]; });
              legal = 1 + static_cast<std::size_t>(std::count_if(inc.begin(), inc.end(), [&](EdgeId e) { return !occ[e]; }));
              break;
          }
          if (legal > 255) throw std::overflow_error("solver: degree too large for move counters");
          counters_[c * n_ + r] = static_cast<std::uint8_t>(legal);
          if (terminal) {
            res_.ranks_[robber_index(c, r)] = 0;
            rf[w].push_back(robber_index(c, r));
          }
          if (var == Variant::Classical && occ[r]) {
            res_.ranks_[cop_index(c, r)] = 0;
            cf[w].push_back(cop_index(c, r));
          }
        }
        for (auto p : cops) occ[p] = 0;
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (std::size_t w = 0; w < workers; ++w) {
      cop_front.insert(cop_front.end(), cf[w].begin(), cf[w].end());
      rob_front.insert(rob_front.end(), rf[w].begin(), rf[w].end());
    }
  }

  static bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1; }
  static void set_bit(std::vector<std::uint64_t>& bits, std::uint64_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }

  // Newly won robber-to-move states -> cop-to-move states won at `rank`.
  void propagate_cop_side(const std::vector<std::uint64_t>& rob_front, std::uint16_t rank,
                          std::vector<std::uint64_t>& next_cop) {
    const std::size_t k = spec_.k;
    std::vector<std::uint64_t> cur;
    cur.reserve(rob_front.size());
    for (auto idx : rob_front) cur.push_back(idx - M_ * n_);  // layer-k index
    std::vector<std::uint32_t> mv(k), um(k), mm(k), up(k);
    for (std::size_t j = k; j-- > 0;) {
      // Nodes in `cur` live in layer j+1: moved multiset of size j+1, unmoved k-j-1.
      const std::size_t a = j + 1, b = k - j - 1;
      const std::uint64_t cnt_b = codec_->count(b), cnt_next = codec_->count(k - j);
      std::vector<std::uint64_t> out;
      for (auto node : cur) {
        const Vertex r = static_cast<Vertex>(node % n_);
        const std::uint64_t q = node / n_;
        codec_->unrank(q / cnt_b, a, mv.data());
        codec_->unrank(q % cnt_b, b, um.data());
        const Position limit = b == 0 ? std::numeric_limits<Position>::max() : um[0];
        for (std::size_t i = 0; i < a; ++i) {
          if (i > 0 && mv[i] == mv[i - 1]) continue;
          // moved minus mv[i]
          std::size_t t = 0;
          for (std::size_t x = 0; x < a; ++x)
            if (x != i) mm[t++] = mv[x];
          const std::uint64_t mrank = codec_->rank(std::span<const std::uint32_t>(mm.data(), a - 1));
          for (Position u : moves_[mv[i]]) {
            if (u > limit) break;
            ++res_.stats.transitions;
            up[0] = u;
            for (std::size_t x = 0; x < b; ++x) up[x + 1] = um[x];
            const std::uint64_t urank = codec_->rank(std::span<const std::uint32_t>(up.data(), b + 1));
            const std::uint64_t pred = (mrank * cnt_next + urank) * n_ + r;
            if (j == 0) {
              if (res_.ranks_[pred] == kUnsetRank) {
                res_.ranks_[pred] = rank;
                next_cop.push_back(pred);
              }
            } else if (!test_bit(layer_[j], pred)) {
              set_bit(layer_[j], pred);
              out.push_back(pred);
            }
          }
        }
      }
      cur.swap(out);
    }
  }

  // Newly won cop-to-move states -> robber-to-move states whose every legal
  // move is now won.
  void propagate_robber_side(const std::vector<std::uint64_t>& cop_front, std::uint16_t rank,
                             std::vector<std::uint64_t>& next_rob) {
    const Graph& g = spec_.g();
    const Variant var = spec_.variant;
    std::vector<std::uint32_t> cops(spec_.k);
    for (auto idx : cop_front) {
      const Vertex r = static_cast<Vertex>(idx % n_);
      const std::uint64_t c = idx / n_;
      codec_->unrank(c, spec_.k, cops.data());
      auto occupied = [&](Position p) { return std::binary_search(cops.begin(), cops.end(), p); };
      auto touch = [&](Vertex from) {
        ++res_.stats.transitions;
        const std::uint64_t ri = robber_index(c, from);
        if (res_.ranks_[ri] != kUnsetRank) return;
        if (--counters_[c * n_ + from] == 0) {
          res_.ranks_[ri] = rank;
          next_rob.push_back(ri);
        }
      };
      if (var == Variant::VertexSurroundRestrictive && occupied(r)) continue;  // never a legal target
      touch(r);
      auto nb = g.neighbors(r);
      auto inc = g.incident_edges(r);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (var == Variant::EdgeSurroundRestrictive && occupied(inc[i])) continue;
        touch(nb[i]);
      }
    }
  }

  void decide_placement() {
    const std::size_t k = spec_.k;
    std::vector<std::uint32_t> cops(k);
    bool have_win = false;
    std::uint32_t best_worst = 0;
    std::uint64_t best_safe = std::numeric_limits<std::uint64_t>::max();
    std::vector<Position> best;
    for (std::uint64_t c = 0; c < M_; ++c) {
      codec_->unrank(c, k, cops.data());
      std::uint32_t worst = 0;
      std::uint64_t safe = 0;
      for (Vertex r = 0; r < n_; ++r) {
        if (spec_.variant == Variant::VertexSurroundRestrictive && std::binary_search(cops.begin(), cops.end(), r))
          continue;
        auto rk = res_.ranks_[cop_index(c, r)];
        if (rk == kUnsetRank)
          ++safe;
        else
          worst = std::max<std::uint32_t>(worst, rk);
      }
      if (safe == 0) {
        if (!have_win || worst < best_worst || (worst == best_worst && cops < best)) {
          have_win = true;
          best_worst = worst;
          best = cops;
        }
      } else if (!have_win && (safe < best_safe || (safe == best_safe && cops < best))) {
        best_safe = safe;
        best = cops;
      }
    }
    res_.verdict = have_win ? Verdict::CopWin : Verdict::RobberWin;
    res_.placement = best;
    res_.placement_rank = have_win ? best_worst : 0;
  }

  GameSpec spec_;
  SolveOptions opts_;
  MoveTable moves_;
  SolveResult res_;
  const MultisetCodec* codec_ = nullptr;
  std::uint64_t n_ = 0;
  std::uint64_t M_ = 0;
  std::vector<std::vector<std::uint64_t>> layer_;
  std::vector<std::uint8_t> counters_;
};

inline SolveResult solve_fixed_k(const GameSpec& spec, const SolveOptions& opts = {}) {
  return Retrograde(spec, opts).run();
}

// Every distinct cop multiset reachable by one joint move, ascending.
inline std::vector<std::vector<Position>> cop_joint_moves(const GameSpec& spec, std::span<const Position> cops) {
  std::set<std::vector<Position>> out;
  std::vector<std::vector<Position>> opts;
  for (auto p : cops) opts.push_back(cop_moves_from(spec, p));
  std::vector<Position> cur(cops.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cops.size()) {
      auto s = cur;
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
      return;
    }
    // Equal cops are interchangeable: keep their choices non-decreasing.
    for (auto p : opts[i]) {
      if (i > 0 && cops[i] == cops[i - 1] && p < cur[i - 1]) continue;
      cur[i] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return {out.begin(), out.end()};
}

class StrategyQueryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Rank-decreasing cop reply from a won cop-to-move state (lexicographically
// smallest among optimal ones). From a lost state the reply minimizes the
// number of robber moves into safe cop-to-move states.
inline std::vector<Position> solver_cop_move(const SolveResult& res, std::span<const Position> cops, Vertex r,
                                             bool strict = false) {
  const GameSpec& spec = res.spec;
  auto here = res.rank(cops, r, Side::Cops);
  auto succ = cop_joint_moves(spec, cops);
  if (here) {
    for (const auto& c2 : succ) {
      auto rk = res.rank(c2, r, Side::Robber);
      if (rk && *rk + 1 == *here) return c2;
    }
    if (*here == 0) return {cops.begin(), cops.end()};
    throw StrategyQueryError("solver_cop_move: no rank-decreasing move (corrupt ranks)");
  }
  if (strict) throw StrategyQueryError("solver_cop_move: state is outside the cops' winning region");
  const std::vector<Position>* best = nullptr;
  std::size_t best_safe = std::numeric_limits<std::size_t>::max();
  for (const auto& c2 : succ) {
    std::size_t safe = 0;
    for (auto to : robber_moves(spec, c2, r))
      if (!res.won(c2, to, Side::Cops)) ++safe;
    if (is_cop_win_state(spec, c2, r, Side::Robber)) safe = 0;
    if (safe < best_safe) {
      best_safe = safe;
      best = &c2;
    }
  }
  return *best;
}

// Robber reply: the smallest move into a state the cops have not won; when
// every move loses, the one that delays longest.
inline Vertex solver_robber_move(const SolveResult& res, std::span<const Position> cops, Vertex r, bool strict = false) {
  auto opts = robber_moves(res.spec, cops, r);
  if (opts.empty()) throw StrategyQueryError("solver_robber_move: robber has no legal move");
  std::optional<Vertex> best;
  std::uint32_t best_rank = 0;
  for (auto to : opts) {
    auto rk = res.rank(cops, to, Side::Cops);
    if (!rk) return to;
    if (!best || *rk > best_rank) {
      best = to;
      best_rank = *rk;
    }
  }
  if (strict) throw StrategyQueryError("solver_robber_move: state is inside the cops' winning region");
  return *best;
}

inline std::optional<Vertex> solver_robber_placement(const SolveResult& res, std::span<const Position> cops) {
  auto opts = robber_placements(res.spec, cops);
  if (opts.empty()) return std::nullopt;
  std::optional<Vertex> best;
  std::uint32_t best_rank = 0;
  for (auto v : opts) {
    auto rk = res.rank(cops, v, Side::Cops);
    if (!rk) return v;
    if (!best || *rk > best_rank) {
      best = v;
      best_rank = *rk;
    }
  }
  return best;
}

struct LowerBounds {
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::size_t degeneracy = 0;
};

inline LowerBounds lower_bounds(const Graph& g) {
  auto d = degrees(g);
  return {d.min, d.max, surround::degeneracy(g)};
}

// The trivial degree lower bound for a variant.
inline std::size_t trivial_lower_bound(const Graph& g, Variant v) {
  auto lb = lower_bounds(g);
  switch (v) {
    case Variant::Classical: return 1;
    case Variant::VertexSurroundRestrictive: return std::max<std::size_t>(1, lb.degeneracy);
    default: return std::max<std::size_t>(1, lb.Delta);
  }
}

struct KVerdict {
  std::size_t k = 0;
  std::optional<Verdict> verdict;  // nullopt: budget exceeded
  SolveStats stats;
  std::vector<Position> placement;
  std::uint32_t placement_rank = 0;
};

struct CopNumberOptions {
  SolveOptions solve;
  bool trust_bounds = false;
  std::size_t max_k = 0;  // 0: the size of the cop position domain
  bool keep_results = false;
};

struct CopNumberReport {
  Variant variant = Variant::Classical;
  std::string graph_id;
  std::optional<std::size_t> k_star;
  std::size_t start_k = 1;
  // Bracket: k_star lies in [lower, upper]; upper == 0 means unknown.
  std::size_t lower = 1;
  std::size_t upper = 0;
  std::vector<KVerdict> verdicts;
  LowerBounds bounds;
  std::shared_ptr<const SolveResult> cop_win;
  std::shared_ptr<const SolveResult> robber_win;

  bool complete() const { return k_star.has_value(); }
};

inline CopNumberReport cop_number(const Graph& g, Variant variant, const CopNumberOptions& opts = {},
                                  std::string graph_id = "") {
  if (!is_connected(g)) throw RuleError("cop_number: graph must be connected");
  CopNumberReport rep;
  rep.variant = variant;
  rep.graph_id = std::move(graph_id);
  rep.bounds = lower_bounds(g);
  auto shared = std::make_shared<const Graph>(g);
  const std::size_t domain = on_edges(variant) ? g.size() : g.order();
  const std::size_t max_k = opts.max_k ? opts.max_k : std::max<std::size_t>(1, domain);
  rep.start_k = opts.trust_bounds ? std::min(trivial_lower_bound(g, variant), max_k) : 1;
  rep.lower = rep.start_k;
  std::shared_ptr<const SolveResult> last_robber;
  for (std::size_t k = rep.start_k; k <= max_k; ++k) {
    KVerdict kv;
    kv.k = k;
    GameSpec spec(shared, variant, k);
    try {
      auto res = std::make_shared<SolveResult>(solve_fixed_k(spec, opts.solve));
      kv.verdict = res->verdict;
      kv.stats = res->stats;
      kv.placement = res->placement;
      kv.placement_rank = res->placement_rank;
      rep.verdicts.push_back(kv);
      if (res->verdict == Verdict::CopWin) {
        rep.k_star = k;
        rep.lower = rep.upper = k;
        if (opts.keep_results) {
          rep.cop_win = res;
          rep.robber_win = last_robber;
        }
        return rep;
      }
      rep.lower = k + 1;
      if (opts.keep_results) last_robber = res;
    } catch (const BudgetExceeded&) {
      rep.verdicts.push_back(kv);
      rep.upper = domain;  // cops on every position always win
      return rep;
    }
  }
  rep.upper = 0;
  return rep;
}

}  // namespace surround
