#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bqaoa/bitstring.hpp"
#include "bqaoa/problem.hpp"
#include "bqaoa/sample_counts.hpp"

namespace bqaoa {

struct GreedyConfig {
  int max_traversals = 5;
  int restarts = 5;  // K
  std::uint64_t seed = 0;

  void validate() const;
};

struct GreedyResult {
  Bitstring bits;
  /// True when a full traversal made no flip before the traversal cap.
  bool converged = false;
  int traversals = 0;
  std::size_t flips = 0;
};

/// Single-flip descent. Each traversal visits the indices in a freshly
/// shuffled order and takes every strictly improving flip; ties are kept.
[[nodiscard]] GreedyResult greedy_descent(const Bitstring& x, const SpinPolynomial& poly, const TermIndex& index,
                                          std::uint64_t seed, int max_traversals);

[[nodiscard]] Bitstring greedy_pass(const Bitstring& x, const SpinPolynomial& poly, std::uint64_t seed,
                                    int max_traversals = 5);

/// Classical baseline: N uniform random bitstrings, each replaced by the best
/// of K greedy passes with distinct shuffle seeds (or kept if none improves).
[[nodiscard]] std::vector<Bitstring> local_solver(const SpinPolynomial& poly, std::size_t samples,
                                                  const GreedyConfig& config);

/// Greedy pass applied to every shot independently. The seed of the shot at
/// ordinal o (in expanded, bit-ordered position) derives from (config.seed, o).
[[nodiscard]] SampleCounts postprocess_counts(const SampleCounts& counts, const SpinPolynomial& poly,
                                              const GreedyConfig& config);

}  // namespace bqaoa
