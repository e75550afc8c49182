#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bqaoa/bitstring.hpp"
#include "bqaoa/problem.hpp"
#include "bqaoa/sample_counts.hpp"

namespace bqaoa {

inline constexpr std::size_t kDefaultEnumerationCap = 26;

struct BruteForceOptions {
  std::size_t max_qubits = kDefaultEnumerationCap;
  /// Argmins kept in ExactResult::argmins; argmin_count is always exact.
  std::size_t max_stored_argmins = std::size_t{1} << 20;
  unsigned threads = 1;
};

struct ExactResult {
  double cmin = 0.0;
  double cmax = 0.0;
  std::vector<Bitstring> argmins;  // sorted
  std::uint64_t argmin_count = 0;
};

/// Exact minimum, maximum and minimizers by walking all 2^n assignments in
/// Gray-code order with single-flip cost updates.
[[nodiscard]] ExactResult brute_force(const SpinPolynomial& poly, const BruteForceOptions& options = {});

/// (C(x) - Cmax) / (Cmin - Cmax); 1 at the minimum, 0 at the maximum.
[[nodiscard]] double approximation_ratio(double cost, double cmin, double cmax);

struct TopSolution {
  Bitstring bits;
  std::uint64_t count = 0;
};

/// Per-run metrics: best objective with its AR and likelihood, mean objective
/// and AR over all shots, shots landing on the best value, and the number of
/// distinct exact minimizers seen.
struct RunSummary {
  double best = 0.0;
  double best_ar = 0.0;
  double likelihood = 0.0;
  double mean = 0.0;
  double mean_ar = 0.0;
  std::uint64_t count = 0;
  std::size_t unique_optimal = 0;
  std::uint64_t shots = 0;
  std::vector<TopSolution> top_solutions;
};

[[nodiscard]] RunSummary summarize(const SampleCounts& counts, const SpinPolynomial& poly, const ExactResult& exact);

struct CdfPoint {
  double fraction = 0.0;  // share of shots with AR >= ar
  double ar = 0.0;
};

/// One point per distinct AR level, in increasing AR order.
[[nodiscard]] std::vector<CdfPoint> ar_cdf(const SampleCounts& counts, const SpinPolynomial& poly,
                                           const ExactResult& exact);

/// Share of shots with AR >= level, read off an ar_cdf table.
[[nodiscard]] double fraction_at_least(const std::vector<CdfPoint>& cdf, double level);

/// N bitstrings drawn uniformly at random.
[[nodiscard]] SampleCounts random_baseline(const SpinPolynomial& poly, std::size_t samples, std::uint64_t seed);

}  // namespace bqaoa
