#include <gtest/gtest.h>

#include "oracle.hpp"
#include "surround/bounds.hpp"
#include "surround/families.hpp"
#include "surround/match.hpp"
#include "surround/solver.hpp"

using namespace surround;

namespace {

Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph c4() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

std::size_t cn(const Graph& g, Variant v) {
  auto rep = cop_number(g, v);
  EXPECT_TRUE(rep.k_star.has_value());
  return rep.k_star.value_or(0);
}

}  // namespace

TEST(Solver, FixedKExamples) {
  EXPECT_EQ(solve_fixed_k(GameSpec(path(2), Variant::Classical, 1)).verdict, Verdict::CopWin);
  EXPECT_EQ(solve_fixed_k(GameSpec(c4(), Variant::Classical, 1)).verdict, Verdict::RobberWin);
  EXPECT_EQ(solve_fixed_k(GameSpec(complete_bipartite(3, 3).graph, Variant::Classical, 2)).verdict, Verdict::CopWin);
}

TEST(Solver, CopNumberExamples) {
  auto star = complete_bipartite(1, 3).graph;
  EXPECT_EQ(cn(star, Variant::VertexSurround), 3u);
  EXPECT_EQ(cn(star, Variant::VertexSurroundRestrictive), 1u);
  EXPECT_EQ(cn(attach_leaves(complete_bipartite(1, 1), 2).graph, Variant::EdgeSurround), 3u);
  EXPECT_EQ(cn(complete_bipartite(2, 3).graph, Variant::EdgeSurroundRestrictive), 3u);
}

TEST(Solver, CopNumberReportCarriesCertificates) {
  CopNumberOptions o;
  o.keep_results = true;
  auto rep = cop_number(complete_bipartite(1, 3).graph, Variant::VertexSurround, o, "star");
  ASSERT_EQ(rep.k_star, 3u);
  ASSERT_EQ(rep.verdicts.size(), 3u);
  EXPECT_EQ(rep.verdicts[1].verdict, Verdict::RobberWin);
  EXPECT_EQ(rep.verdicts[2].verdict, Verdict::CopWin);
  ASSERT_TRUE(rep.cop_win && rep.robber_win);
  EXPECT_EQ(rep.robber_win->spec.k, 2u);
  EXPECT_EQ(rep.bounds.Delta, 3u);
  o.trust_bounds = true;
  auto fast = cop_number(complete_bipartite(1, 3).graph, Variant::VertexSurround, o);
  EXPECT_EQ(fast.start_k, 3u);
  EXPECT_EQ(fast.k_star, 3u);
}

// Every state of every connected graph on at most four vertices, k <= 2, all
// variants, against ordered-tuple naive iteration.
TEST(Solver, AgreesWithNaiveReferenceStateByState) {
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto graphs = n == 1 ? std::vector<Graph>{Graph::build(1, {})} : connected_graphs(n);
    for (const auto& g : graphs)
      for (auto var : kAllVariants) {
        if (on_edges(var) && g.size() == 0) continue;
        for (std::size_t k = 1; k <= 2; ++k) {
          GameSpec spec(g, var, k);
          auto res = solve_fixed_k(spec);
          auto ref = oracle::naive_solve(spec);
          ASSERT_EQ(res.verdict == Verdict::CopWin, ref.cops_win) << variant_name(var) << " n=" << n << " k=" << k;
          for (std::size_t i = 0; i < ref.tuples.size(); ++i) {
            auto sorted = sorted_copy(ref.tuples[i]);
            for (Vertex r = 0; r < g.order(); ++r) {
              ASSERT_EQ(res.won(sorted, r, Side::Cops), bool(ref.win[0][i][r]));
              ASSERT_EQ(res.won(sorted, r, Side::Robber), bool(ref.win[1][i][r]));
              ++compared;
            }
          }
        }
      }
  }
  EXPECT_GT(compared, 1000u);
}

TEST(Solver, MonotoneInK) {
  for (const auto& cg : connected_corpus(5)) {
    for (auto var : kAllVariants) {
      bool won = false;
      for (std::size_t k = 1; k <= 3; ++k) {
        bool now = solve_fixed_k(GameSpec(cg.graph, var, k)).verdict == Verdict::CopWin;
        EXPECT_FALSE(won && !now) << cg.id << " " << variant_name(var) << " k=" << k;
        won = won || now;
      }
    }
  }
}

TEST(Solver, ResultsDoNotDependOnWorkerCount) {
  for (auto g : {attach_leaves(complete_bipartite(1, 1), 2).graph, complete_bipartite(3, 3).graph, c4()})
    for (auto var : kAllVariants) {
      GameSpec spec(g, var, 2);
      auto a = solve_fixed_k(spec, {200'000'000, 1});
      auto b = solve_fixed_k(spec, {200'000'000, 3});
      EXPECT_EQ(a.verdict, b.verdict);
      EXPECT_EQ(a.placement, b.placement);
      EXPECT_EQ(a.placement_rank, b.placement_rank);
      for (std::uint64_t i = 0; i < a.num_states(); ++i) ASSERT_EQ(a.rank(i), b.rank(i));
    }
}

TEST(Solver, StateIndexRoundTrip) {
  auto res = solve_fixed_k(GameSpec(complete_bipartite(2, 3).graph, Variant::EdgeSurround, 2));
  for (std::uint64_t i = 0; i < res.num_states(); ++i) ASSERT_EQ(res.index(res.decode(i)), i);
  EXPECT_EQ(res.num_states(), state_count(res.spec));
}

// Ranks strictly decrease along optimal play: cop states have a successor one
// lower, robber states have every reply at most one lower.
TEST(Solver, RanksAreConsistent) {
  for (auto var : kAllVariants) {
    auto res = solve_fixed_k(GameSpec(attach_leaves(complete_bipartite(1, 2), 1).graph, var, 2));
    const auto& spec = res.spec;
    for (std::uint64_t i = 0; i < res.num_states(); ++i) {
      auto rk = res.rank(i);
      if (!rk || *rk == 0) continue;
      auto c = res.decode(i);
      if (c.to_move == Side::Cops) {
        std::uint32_t best = kUnsetRank;
        for (const auto& to : cop_joint_moves(spec, c.cops))
          if (auto r2 = res.rank(to, c.robber, Side::Robber)) best = std::min(best, *r2);
        EXPECT_EQ(best + 1, *rk);
        auto mv = solver_cop_move(res, c.cops, c.robber, true);
        EXPECT_EQ(res.rank(mv, c.robber, Side::Robber), *rk - 1);
      } else {
        std::uint32_t worst = 0;
        for (auto to : robber_moves(spec, c.cops, c.robber)) {
          auto r2 = res.rank(c.cops, to, Side::Cops);
          ASSERT_TRUE(r2.has_value());
          worst = std::max(worst, *r2);
        }
        EXPECT_EQ(worst + 1, *rk);
      }
    }
  }
}

TEST(Solver, BudgetIsEnforced) {
  GameSpec spec(complete_bipartite(3, 3).graph, Variant::VertexSurround, 3);
  EXPECT_THROW(solve_fixed_k(spec, {100, 1}), BudgetExceeded);
  CopNumberOptions o;
  o.solve.budget = 200;
  auto rep = cop_number(complete_bipartite(3, 3).graph, Variant::VertexSurround, o);
  EXPECT_FALSE(rep.k_star.has_value());
  EXPECT_FALSE(rep.verdicts.back().verdict.has_value());
  EXPECT_LE(rep.lower, 3u);
  EXPECT_GE(rep.upper, 3u);
}

TEST(Solver, StrictQueriesRefuseOutsideTheirRegion) {
  auto res = solve_fixed_k(GameSpec(c4(), Variant::Classical, 1));
  std::vector<Position> cop{0};
  EXPECT_THROW(solver_cop_move(res, cop, 2, true), StrategyQueryError);
  EXPECT_NO_THROW(solver_cop_move(res, cop, 2, false));
  auto win = solve_fixed_k(GameSpec(path(3), Variant::Classical, 1));
  std::vector<Position> mid{1};
  EXPECT_THROW(solver_robber_move(win, mid, 0, true), StrategyQueryError);
}

TEST(Solver, ExtractedStrategiesPlayOut) {
  auto k2 = std::make_shared<const SolveResult>(solve_fixed_k(GameSpec(path(2), Variant::Classical, 1)));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SolverCopController cops(k2, true);
    auto rob = robber_adversary("random", seed);
    auto t = run_match(k2->spec, cops, *rob, 100);
    EXPECT_EQ(t.outcome, Outcome::CopWin);
    EXPECT_LE(t.rounds, 1u);
  }
  auto c = std::make_shared<const SolveResult>(solve_fixed_k(GameSpec(c4(), Variant::Classical, 1)));
  for (const char* kind : {"random", "greedy", "stationary"}) {
    SolverRobberController rob(c, true);
    auto cops = cop_adversary(kind, 1);
    auto t = run_match(c->spec, *cops, rob, 10000);
    EXPECT_EQ(t.outcome, Outcome::StepLimit) << kind;
  }
  auto k33 = std::make_shared<const SolveResult>(solve_fixed_k(GameSpec(complete_bipartite(3, 3).graph, Variant::VertexSurround, 3)));
  ASSERT_EQ(k33->verdict, Verdict::CopWin);
  auto rep = verify_cops_exhaustively(k33->spec, SolverCopController(k33, true), 100, 1'000'000);
  EXPECT_TRUE(rep.cop_always_wins) << rep.failure;
  EXPECT_LE(rep.worst_rounds, k33->placement_rank);
}

TEST(Solver, LowerBounds) {
  auto lb = lower_bounds(complete_bipartite(2, 4).graph);
  EXPECT_EQ(lb.delta, 2u);
  EXPECT_EQ(lb.Delta, 4u);
  EXPECT_EQ(lb.degeneracy, 2u);
  EXPECT_EQ(trivial_lower_bound(complete_bipartite(2, 4).graph, Variant::VertexSurroundRestrictive), 2u);
  EXPECT_EQ(trivial_lower_bound(complete_bipartite(2, 4).graph, Variant::EdgeSurround), 4u);
}
