#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bqaoa/error.hpp"
#include "bqaoa/instances.hpp"
#include "bqaoa/postprocess.hpp"
#include "support/oracles.hpp"

using namespace bqaoa;

namespace {

bool is_local_minimum(const SpinPolynomial& poly, const Bitstring& x) {
  const double c = oracle::cost(poly, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (oracle::cost(poly, flipped(x, i)) < c - 1e-12) return false;
  }
  return true;
}

SpinPolynomial spin_glass_12(std::uint64_t seed) {
  const auto f = heavy_hex_fragment(1, 1);
  return spin_glass_instance(f.graph, f.triples, seed);
}

}  // namespace

TEST(Greedy, LocalMinimumIsUnchanged) {
  const auto poly = maxcut_polynomial(WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}));
  const auto x = Bitstring::parse("010");
  EXPECT_EQ(greedy_pass(x, poly, 1), x);
}

TEST(Greedy, TriangleReachesACut) {
  const auto g = WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const auto poly = maxcut_polynomial(g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto y = greedy_pass(Bitstring::parse("000"), poly, seed);
    EXPECT_EQ(hamming_distance(y, Bitstring::parse("000")), 1U);
    EXPECT_DOUBLE_EQ(cut_value(g, y), 2.0);
  }
}

TEST(Greedy, ConvergedOutputsHaveNoImprovingFlip) {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto poly = spin_glass_12(seed);
    const TermIndex idx(poly);
    for (int s = 0; s < 20; ++s) {
      const auto x = oracle::random_bits(12, rng);
      const auto r = greedy_descent(x, poly, idx, rng(), 100);
      ASSERT_TRUE(r.converged);
      EXPECT_TRUE(is_local_minimum(poly, r.bits));
      EXPECT_LE(oracle::cost(poly, r.bits), oracle::cost(poly, x) + 1e-12);
    }
  }
}

TEST(Greedy, TraversalCapIsRespected) {
  std::mt19937_64 rng(2);
  const auto poly = oracle::random_polynomial(14, 60, 3, rng);
  const TermIndex idx(poly);
  for (int s = 0; s < 50; ++s) {
    const auto r = greedy_descent(oracle::random_bits(14, rng), poly, idx, rng(), 1);
    EXPECT_EQ(r.traversals, 1);
  }
}

TEST(Greedy, SameSeedSameResult) {
  std::mt19937_64 rng(4);
  const auto poly = oracle::random_polynomial(12, 40, 3, rng);
  const auto x = oracle::random_bits(12, rng);
  EXPECT_EQ(greedy_pass(x, poly, 99), greedy_pass(x, poly, 99));
}

TEST(LocalSolver, ZeroPolynomialKeepsRandomInputs) {
  const SpinPolynomial zero(10, {});
  const auto out = local_solver(zero, 200, {5, 5, 3});
  EXPECT_EQ(out.size(), 200U);
  std::set<Bitstring> distinct(out.begin(), out.end());
  EXPECT_GT(distinct.size(), 150U);
}

TEST(LocalSolver, ImprovesOnRandomInputs) {
  const auto poly = spin_glass_12(5);
  const auto out = local_solver(poly, 500, {5, 5, 8});
  std::mt19937_64 rng(8);
  double mean_out = 0.0, mean_rand = 0.0;
  for (const auto& x : out) {
    mean_out += evaluate(poly, x) / 500;
  }
  for (int s = 0; s < 500; ++s) mean_rand += evaluate(poly, oracle::random_bits(12, rng)) / 500;
  EXPECT_LT(mean_out, mean_rand);
  EXPECT_EQ(local_solver(poly, 50, {5, 5, 8}), local_solver(poly, 50, {5, 5, 8}));
}

TEST(LocalSolver, RejectsBadConfig) {
  const auto poly = spin_glass_12(1);
  EXPECT_THROW((void)local_solver(poly, 0, {}), InvalidInput);
  EXPECT_THROW((void)local_solver(poly, 5, {0, 5, 1}), InvalidInput);
  EXPECT_THROW((void)local_solver(poly, 5, {5, 0, 1}), InvalidInput);
}

TEST(PostprocessCounts, LocalMinimaAreUnchanged) {
  const auto poly = spin_glass_12(3);
  const auto minima = local_solver(poly, 100, {100, 5, 1});
  SampleCounts counts(12);
  for (const auto& x : minima) {
    if (is_local_minimum(poly, x)) counts.add(x);
  }
  ASSERT_FALSE(counts.empty());
  EXPECT_EQ(postprocess_counts(counts, poly, {100, 1, 2}), counts);
}

TEST(PostprocessCounts, NeverRaisesAnyShotAndKeepsShots) {
  std::mt19937_64 rng(6);
  const auto poly = spin_glass_12(6);
  SampleCounts counts(12);
  for (int s = 0; s < 400; ++s) counts.add(oracle::random_bits(12, rng));
  const auto post = postprocess_counts(counts, poly, {5, 1, 11});
  EXPECT_EQ(post.shots(), counts.shots());
  double raw_mean = 0.0, post_mean = 0.0;
  for (const auto& [b, m] : counts) raw_mean += evaluate(poly, b) * m;
  for (const auto& [b, m] : post) post_mean += evaluate(poly, b) * m;
  EXPECT_LT(post_mean, raw_mean);
  EXPECT_EQ(post, postprocess_counts(counts, poly, {5, 1, 11}));
}
