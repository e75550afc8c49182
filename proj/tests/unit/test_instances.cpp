#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "bqaoa/error.hpp"
#include "bqaoa/instances.hpp"

using namespace bqaoa;

namespace {

void expect_heavy_hex_shape(const CouplingFragment& f) {
  EXPECT_LE(f.graph.max_degree(), 3U);
  for (const auto& t : f.triples) {
    EXPECT_TRUE(f.graph.has_edge(t[0], t[1]));
    EXPECT_TRUE(f.graph.has_edge(t[1], t[2]));
    EXPECT_EQ(f.graph.degree(t[1]), 2U);
    EXPECT_LT(t[0], t[2]);
  }
}

}  // namespace

TEST(HeavyHex, SingleCellCountsAreFrozen) {
  const auto f = heavy_hex_fragment(1, 1);
  EXPECT_EQ(f.graph.n(), 12U);
  EXPECT_EQ(f.graph.edges().size(), 12U);
  EXPECT_EQ(f.triples.size(), 12U);
  for (std::size_t v = 0; v < 12; ++v) EXPECT_EQ(f.graph.degree(v), 2U);
  expect_heavy_hex_shape(f);
}

TEST(HeavyHex, TwoByOneCountsAreFrozen) {
  const auto f = heavy_hex_fragment(2, 1);
  EXPECT_EQ(f.graph.n(), 18U);
  EXPECT_EQ(f.graph.edges().size(), 18U);
  EXPECT_EQ(f.triples.size(), 14U);
  expect_heavy_hex_shape(f);
}

TEST(HeavyHex, LargerPatchesKeepTheShape) {
  for (int rows = 1; rows <= 3; ++rows) {
    for (int cols = 1; cols <= 3; ++cols) {
      const auto f = heavy_hex_fragment(rows, cols);
      expect_heavy_hex_shape(f);
      // Every node is reachable.
      std::vector<bool> seen(f.graph.n(), false);
      std::vector<VarIndex> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto u : f.graph.neighbors(v)) {
          if (!seen[u]) {
            seen[u] = true;
            stack.push_back(u);
          }
        }
      }
      EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
  }
  EXPECT_THROW((void)heavy_hex_fragment(0, 1), InvalidInput);
}

TEST(SpinGlass, NoEdgesGivesLinearTermsOnly) {
  const auto p = spin_glass_instance(WeightedGraph(4, {}), {}, 1);
  EXPECT_EQ(p.terms().size(), 4U);
  EXPECT_EQ(p.count_degree(1), 4U);
  for (const auto& t : p.terms()) EXPECT_EQ(std::abs(t.coeff), 1.0);
}

TEST(SpinGlass, TermCountsFollowTheCoupling) {
  const auto f = heavy_hex_fragment(2, 1);
  const auto p = spin_glass_instance(f.graph, f.triples, 3);
  EXPECT_EQ(p.count_degree(1), f.graph.n());
  EXPECT_EQ(p.count_degree(2), f.graph.edges().size());
  EXPECT_EQ(p.count_degree(3), f.triples.size());
  for (const auto& t : p.terms()) EXPECT_EQ(std::abs(t.coeff), 1.0);
}

TEST(SpinGlass, SeedDeterminesCoefficients) {
  const auto f = heavy_hex_fragment(1, 1);
  EXPECT_EQ(spin_glass_instance(f.graph, f.triples, 7), spin_glass_instance(f.graph, f.triples, 7));
  EXPECT_NE(spin_glass_instance(f.graph, f.triples, 7), spin_glass_instance(f.graph, f.triples, 8));
}

TEST(SpinGlass, SignsAreRoughlyBalanced) {
  const auto f = heavy_hex_fragment(3, 3);
  int positive = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& t : spin_glass_instance(f.graph, f.triples, seed).terms()) {
      positive += t.coeff > 0 ? 1 : 0;
      ++total;
    }
  }
  EXPECT_NEAR(static_cast<double>(positive) / total, 0.5, 0.05);
}

TEST(SpinGlass, RejectsBadTriples) {
  const auto f = heavy_hex_fragment(1, 1);
  EXPECT_THROW((void)spin_glass_instance(f.graph, {{0, 0, 1}}, 1), InvalidInput);
  EXPECT_THROW((void)spin_glass_instance(f.graph, {{0, 1, 99}}, 1), InvalidInput);
  EXPECT_THROW((void)spin_glass_instance(f.graph, {{0, 1, 2}, {2, 1, 0}}, 1), InvalidInput);
}

TEST(RandomRegular, IsSimpleAndRegular) {
  for (int n : {12, 16, 20}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto g = random_regular_graph(n, 3, seed);
      EXPECT_EQ(g.edges().size(), static_cast<std::size_t>(3 * n / 2));
      for (int v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), 3U);
    }
  }
  EXPECT_EQ(random_regular_graph(16, 3, 4), random_regular_graph(16, 3, 4));
  EXPECT_NE(random_regular_graph(16, 3, 4), random_regular_graph(16, 3, 5));
  EXPECT_THROW((void)random_regular_graph(5, 3, 1), InvalidInput);
}

TEST(RandomRegular, WeightedDrawsFromQuarterSteps) {
  const auto g = random_regular_graph(20, 3, 2, true);
  std::set<double> seen;
  for (const auto& e : g.edges()) seen.insert(e.weight);
  for (double w : seen) EXPECT_TRUE(w == 0.25 || w == 0.5 || w == 0.75 || w == 1.0);
  EXPECT_GE(seen.size(), 3U);
}
