#include <gtest/gtest.h>

#include "oracle.hpp"
#include "surround/bounds.hpp"
#include "surround/families.hpp"

using namespace surround;

TEST(Bounds, CorpusSizesMatchKnownCounts) {
  // Connected graphs up to isomorphism on 2..5 vertices: 1, 2, 6, 21.
  EXPECT_EQ(connected_corpus(5).size(), 1u + 2 + 6 + 21);
  for (const auto& cg : connected_corpus(4)) EXPECT_TRUE(is_connected(cg.graph)) << cg.id;
}

TEST(Bounds, RandomCorpusIsSeeded) {
  auto a = random_connected_corpus(20, 3, 7, 5), b = random_connected_corpus(20, 3, 7, 5);
  auto c = random_connected_corpus(20, 3, 7, 6);
  ASSERT_EQ(a.size(), 20u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].graph.edge_pairs(), b[i].graph.edge_pairs());
    EXPECT_TRUE(is_connected(a[i].graph));
    EXPECT_GE(a[i].graph.order(), 3u);
    EXPECT_LE(a[i].graph.order(), 7u);
    differs = differs || a[i].graph.edge_pairs() != c[i].graph.edge_pairs();
  }
  EXPECT_TRUE(differs);
}

TEST(Bounds, SuiteHoldsOnSmallGraphs) {
  auto corpus = connected_corpus(4);
  auto extra = random_connected_corpus(10, 4, 6, 1);
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  auto rep = verify_inequality_suite(corpus);
  EXPECT_EQ(rep.checked, corpus.size());
  EXPECT_EQ(rep.skipped, 0u);
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_EQ(rep.checks, 12 * corpus.size());
  // The lower bounds used must agree with a brute-force oracle.
  for (const auto& gb : rep.graphs) {
    const auto& g = std::find_if(corpus.begin(), corpus.end(), [&](auto& c) { return c.id == gb.id; })->graph;
    EXPECT_EQ(gb.lower.degeneracy, oracle::degeneracy(g)) << gb.id;
  }
}

TEST(Bounds, CorruptedNumbersAreFlagged) {
  auto rep = verify_inequality_suite({{"star", complete_bipartite(1, 3).graph}});
  ASSERT_EQ(rep.graphs.size(), 1u);
  auto gb = rep.graphs[0];
  EXPECT_TRUE(gb.violations.empty());
  // Pretend the free vertex game needed fewer cops than the restrictive one.
  gb.c[detail::variant_slot(Variant::VertexSurround)] = 0;
  gb.violations.clear();
  gb.checks = 0;
  check_bounds(gb);
  EXPECT_FALSE(gb.violations.empty());
  bool saw = false;
  for (const auto& v : gb.violations) saw = saw || v.bound == "c_Vr <= c_V";
  EXPECT_TRUE(saw);
  auto j = graph_bounds_to_json(gb, false);
  EXPECT_TRUE(j.contains("certificates"));
}

TEST(Bounds, RejectsBadInputs) {
  auto split = Graph::build(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(verify_inequality_suite({{"split", split}}), RuleError);
  auto single = Graph::build(1, std::vector<std::pair<Vertex, Vertex>>{});
  EXPECT_THROW(verify_inequality_suite({{"single", single}}), RuleError);
}

TEST(Bounds, JsonCarriesNumbers) {
  auto rep = verify_inequality_suite({{"K33", complete_bipartite(3, 3).graph}});
  auto j = graph_bounds_to_json(rep.graphs[0], true);
  EXPECT_EQ(j["cop_numbers"]["vertex-r"], 3);
  EXPECT_EQ(j["cop_numbers"]["edge-r"], 3);
  EXPECT_EQ(j["lower_bounds"]["Delta"], 3);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_TRUE(j["certificates"].contains("classical"));
}
