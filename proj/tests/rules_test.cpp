#include <gtest/gtest.h>

#include <random>

#include "surround/bounds.hpp"
#include "surround/families.hpp"
#include "surround/rules.hpp"

using namespace surround;

namespace {

Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph c4() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

std::vector<Position> v(std::initializer_list<Position> x) { return x; }

}  // namespace

TEST(Rules, VariantNamesRoundTrip) {
  for (auto var : kAllVariants) EXPECT_EQ(parse_variant(variant_name(var)), var);
  EXPECT_EQ(parse_variant("vertex-r"), Variant::VertexSurroundRestrictive);
  EXPECT_THROW(parse_variant("face"), std::exception);
}

TEST(Rules, SpecRejectsBadGames) {
  EXPECT_THROW(GameSpec(Graph::build(4, {{0, 1}, {2, 3}}), Variant::Classical, 1), RuleError);
  EXPECT_THROW(GameSpec(c4(), Variant::Classical, 0), RuleError);
  EXPECT_THROW(GameSpec(Graph::build(1, {}), Variant::EdgeSurround, 1), RuleError);
  EXPECT_NO_THROW(GameSpec(Graph::build(1, {}), Variant::VertexSurround, 1));
}

TEST(Rules, PositionDomain) {
  EXPECT_EQ(cop_position_domain(GameSpec(c4(), Variant::VertexSurround, 1)), v({0, 1, 2, 3}));
  EXPECT_EQ(cop_position_domain(GameSpec(c4(), Variant::EdgeSurround, 1)).size(), 4u);
  EXPECT_EQ(cop_position_domain(GameSpec(path(2), Variant::Classical, 1)), v({0, 1}));
}

TEST(Rules, CopMoves) {
  auto star = complete_bipartite(1, 3).graph;
  GameSpec vs(star, Variant::VertexSurround, 1);
  EXPECT_EQ(cop_moves_from(vs, 0), v({0, 1, 2, 3}));
  EXPECT_EQ(cop_moves_from(vs, 2), v({0, 2}));
  GameSpec es(path(4), Variant::EdgeSurround, 1);
  EXPECT_EQ(cop_moves_from(es, 1), v({0, 1, 2}));
  EXPECT_THROW(cop_moves_from(vs, 4), RuleError);
}

TEST(Rules, RobberMoves) {
  auto p3 = path(3);
  GameSpec vr(p3, Variant::VertexSurroundRestrictive, 1);
  EXPECT_EQ(robber_moves(vr, v({1}), 1), (std::vector<Vertex>{0, 2}));
  GameSpec er(p3, Variant::EdgeSurroundRestrictive, 1);
  EXPECT_EQ(robber_moves(er, v({0}), 0), (std::vector<Vertex>{0}));
  GameSpec vs(p3, Variant::VertexSurround, 1);
  EXPECT_EQ(robber_moves(vs, v({0}), 1), (std::vector<Vertex>{0, 1, 2}));
  Configuration c{{0}, 1, Side::Cops};
  EXPECT_THROW(robber_moves_from(vs, c), RuleError);
}

TEST(Rules, Terminal) {
  auto star = complete_bipartite(1, 3).graph;
  GameSpec vs(star, Variant::VertexSurround, 3);
  EXPECT_TRUE(is_cop_win_terminal(vs, {{1, 2, 3}, 0, Side::Robber}));
  EXPECT_FALSE(is_cop_win_terminal(vs, {{1, 2, 3}, 0, Side::Cops}));
  GameSpec es(path(3), Variant::EdgeSurround, 1);
  EXPECT_TRUE(is_cop_win_terminal(es, {{0}, 0, Side::Robber}));
  auto k33 = complete_bipartite(3, 3).graph;
  GameSpec v33(k33, Variant::VertexSurround, 2);
  EXPECT_FALSE(is_cop_win_terminal(v33, {{3, 4}, 0, Side::Robber}));
  GameSpec cl(k33, Variant::Classical, 1);
  EXPECT_TRUE(is_cop_win_terminal(cl, {{2}, 2, Side::Cops}));
  EXPECT_TRUE(is_cop_win_terminal(cl, {{2}, 2, Side::Robber}));
}

TEST(Rules, Placements) {
  GameSpec k2(path(2), Variant::Classical, 1);
  EXPECT_EQ(cop_placement_count(k2), 2u);
  EXPECT_EQ(robber_placements(k2, v({0})).size(), 2u);
  GameSpec vr(path(3), Variant::VertexSurroundRestrictive, 3);
  EXPECT_TRUE(robber_placements(vr, v({0, 1, 2})).empty());
  GameSpec e2(c4(), Variant::EdgeSurround, 2);
  EXPECT_EQ(cop_placement_count(e2), 10u);
  std::set<std::vector<Position>> seen;
  for_each_cop_placement(e2, [&](std::span<const Position> c) {
    EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
    seen.insert({c.begin(), c.end()});
  });
  EXPECT_EQ(seen.size(), 10u);
}

TEST(Rules, MultisetCodecRoundTrip) {
  MultisetCodec codec(7, 4);
  for (std::size_t k = 1; k <= 4; ++k) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::uint64_t r = 0; r < codec.count(k); ++r) {
      auto m = codec.unrank(r, k);
      EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
      EXPECT_EQ(codec.rank(m), r);
      seen.insert(m);
    }
    EXPECT_EQ(seen.size(), codec.count(k));
  }
  // C(7+4-1, 4)
  EXPECT_EQ(codec.count(4), 210u);
}

TEST(Rules, MoveRelationsAreSymmetricAndRestrictiveIsSubset) {
  for (const auto& cg : random_connected_corpus(20, 3, 7, 5)) {
    for (auto var : kAllVariants) {
      GameSpec spec(cg.graph, var, 1);
      for (Position p = 0; p < spec.domain_size(); ++p)
        for (Position q : cop_moves_from(spec, p)) {
          auto back = cop_moves_from(spec, q);
          EXPECT_TRUE(std::binary_search(back.begin(), back.end(), p));
        }
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
      Vertex r = std::uniform_int_distribution<Vertex>(0, cg.graph.order() - 1)(rng);
      std::vector<Position> cv{std::uniform_int_distribution<Position>(0, cg.graph.order() - 1)(rng)};
      std::vector<Position> ce{std::uniform_int_distribution<Position>(0, cg.graph.size() - 1)(rng)};
      auto full = robber_moves(GameSpec(cg.graph, Variant::VertexSurround, 1), cv, r);
      auto vr = robber_moves(GameSpec(cg.graph, Variant::VertexSurroundRestrictive, 1), cv, r);
      auto er = robber_moves(GameSpec(cg.graph, Variant::EdgeSurroundRestrictive, 1), ce, r);
      EXPECT_TRUE(std::includes(full.begin(), full.end(), vr.begin(), vr.end()));
      EXPECT_TRUE(std::includes(full.begin(), full.end(), er.begin(), er.end()));
      EXPECT_TRUE(std::binary_search(er.begin(), er.end(), r));
      EXPECT_TRUE(std::binary_search(full.begin(), full.end(), r));
    }
  }
}

// A sorted target is reachable iff some assignment of cops to targets steps
// every cop legally; compared against trying all orderings.
TEST(Rules, JointMoveMatchesPermutationSearch) {
  auto g = complete_bipartite(2, 3).graph;
  for (auto var : kAllVariants) {
    GameSpec spec(g, var, 3);
    const Position d = static_cast<Position>(spec.domain_size());
    std::mt19937_64 rng(9);
    auto pick = [&] {
      std::vector<Position> c(3);
      for (auto& x : c) x = std::uniform_int_distribution<Position>(0, d - 1)(rng);
      std::sort(c.begin(), c.end());
      return c;
    };
    for (int t = 0; t < 200; ++t) {
      auto from = pick(), to = pick();
      bool brute = false;
      auto perm = to;
      do {
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) ok = ok && cop_move_legal(spec, from[i], perm[i]);
        brute = brute || ok;
      } while (std::next_permutation(perm.begin(), perm.end()));
      EXPECT_EQ(joint_move_legal(spec, from, to), brute);
    }
  }
}
