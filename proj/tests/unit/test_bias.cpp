#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bqaoa/bias.hpp"
#include "bqaoa/error.hpp"
#include "support/oracles.hpp"

using namespace bqaoa;
using std::numbers::pi;

namespace {

double log_binomial(std::size_t n, std::size_t k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Log-probability of a state at distance h, straight from sin(delta).
double log_law(std::size_t n, double delta, std::size_t h) {
  const double s = std::sin(delta);
  return (n - h) * std::log((1 + s) / 2) + h * std::log((1 - s) / 2);
}

}  // namespace

TEST(BiasAngle, ComplementCarriesPrecision) {
  const auto a = BiasAngle::from_complement(1e-30);
  EXPECT_EQ(a.complement(), 1e-30);
  EXPECT_NEAR(a.one_minus_sine() / 5e-61, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(BiasAngle(pi / 6).target_probability(), 0.75);
}

TEST(BiasTheta, UniformAndDeterministicLimits) {
  for (double t : bias_theta(Bitstring::parse("1011"), 0.0)) EXPECT_DOUBLE_EQ(t, pi / 2);
  const auto theta = bias_theta(Bitstring::parse("10"), pi / 2);
  EXPECT_DOUBLE_EQ(theta[0], pi);
  EXPECT_DOUBLE_EQ(theta[1], 0.0);
  EXPECT_THROW((void)bias_theta(Bitstring::parse("10"), -0.1), InvalidInput);
  EXPECT_THROW((void)bias_theta(Bitstring::parse("10"), 2.0), InvalidInput);
}

TEST(AmplitudeSq, UnbiasedIsUniform) {
  for (std::size_t n : {1U, 5U, 20U}) {
    for (std::size_t h = 0; h <= n; ++h) EXPECT_NEAR(amplitude_sq(n, 0.0, h) * std::exp2(n), 1.0, 1e-12);
  }
}

TEST(AmplitudeSq, MatchesDirectProduct) {
  for (double d : {0.1, 0.7, 1.3}) {
    for (std::size_t h = 0; h <= 8; ++h) {
      EXPECT_NEAR(amplitude_sq(8, d, h), oracle::biased_probability(8, d, h), 1e-15);
    }
  }
  EXPECT_EQ(amplitude_sq(4, pi / 2, 0), 1.0);
  EXPECT_EQ(amplitude_sq(4, pi / 2, 1), 0.0);
  EXPECT_THROW((void)amplitude_sq(4, 0.2, 5), InvalidInput);
}

TEST(AmplitudeSq, NormalizesOverShells) {
  for (std::size_t n = 1; n <= 20; ++n) {
    for (double d : {0.0, 0.2, 0.9, 1.5, pi / 2}) {
      double total = 0.0;
      for (std::size_t h = 0; h <= n; ++h) total += std::exp(log_binomial(n, h)) * amplitude_sq(n, d, h);
      EXPECT_NEAR(total, 1.0, 1e-12) << "n=" << n << " d=" << d;
    }
  }
}

TEST(DeltaOpt, Endpoints) {
  EXPECT_DOUBLE_EQ(delta_opt(10, 0).radians(), pi / 2);
  EXPECT_EQ(delta_opt(10, 0).complement(), 0.0);
  EXPECT_NEAR(delta_opt(10, 5).radians(), 0.0, 1e-15);
  EXPECT_THROW((void)delta_opt(10, 6), NoPositiveRoot);
}

TEST(DeltaOpt, MatchesGoldenSectionMaximum) {
  for (std::size_t n : {4U, 9U, 30U, 77U, 156U}) {
    for (std::size_t h = 1; 2 * h <= n; h += std::max<std::size_t>(1, n / 12)) {
      const double numeric = oracle::golden_max([&](double d) { return log_law(n, d, h); }, 0.0, pi / 2);
      EXPECT_NEAR(delta_opt(n, h).radians(), numeric, 1e-6) << "n=" << n << " h=" << h;
    }
  }
}

TEST(DeltaMax, Endpoints) {
  EXPECT_DOUBLE_EQ(delta_max(12, 0).radians(), pi / 2);
  EXPECT_THROW((void)delta_max(12, 6), NoPositiveRoot);
  EXPECT_THROW((void)delta_max(12, 7), NoPositiveRoot);
  EXPECT_LT(delta_max(101, 50).radians(), 0.05);
}

TEST(DeltaMax, RootOfTheDefiningEquation) {
  for (std::size_t n : {4U, 11U, 40U}) {
    for (std::size_t h = 1; 2 * h < n; ++h) {
      const double d = delta_max(n, h).radians();
      EXPECT_NEAR(log_law(n, d, h), -static_cast<double>(n) * std::log(2.0), 1e-9 * n);
      EXPECT_GT(d, delta_opt(n, h).radians());
    }
  }
}

TEST(DeltaMax, DecreasesWithDistance) {
  for (std::size_t n : {8U, 33U, 156U}) {
    // Compared through the complement: near pi/2 the radians round together.
    double previous = delta_max(n, 0).complement();
    for (std::size_t h = 1; 2 * h < n; ++h) {
      const double c = delta_max(n, h).complement();
      EXPECT_GT(c, previous) << "n=" << n << " h=" << h;
      previous = c;
    }
  }
}

TEST(DeltaOpt, StaysInRangeAtHalfDistance) {
  for (std::size_t n = 2; n <= 200; n += 2) {
    EXPECT_EQ(delta_opt(n, n / 2).radians(), 0.0);
    EXPECT_NO_THROW((void)amplitude_sq(n, delta_opt(n, n / 2), n / 2));
  }
}
