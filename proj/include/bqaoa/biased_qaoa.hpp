#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bqaoa/bitstring.hpp"
#include "bqaoa/problem.hpp"
#include "bqaoa/sample_counts.hpp"
#include "bqaoa/simulator.hpp"

namespace bqaoa {

/// Settings of the staged optimization loop. Defaults: four stages of four
/// CMA-ES steps with six circuits per step, p = 1, CVaR alpha = 0.35,
/// sigma0 = 0.1.
struct StageConfig {
  std::size_t stages = 4;
  std::size_t steps_per_stage = 4;
  std::size_t circuits_per_step = 6;
  std::size_t shots = 2048;
  std::size_t layers = 1;
  /// One bias angle per stage; the first must be 0 and the sequence must be
  /// non-decreasing within [0, pi/2].
  std::vector<double> bias_schedule = {0.0, 0.45, 0.85, 1.25};
  double sigma0 = 0.1;
  double alpha = 0.35;
  bool gamma_positive = true;
  /// Stage-start (gamma, beta) draw: gamma ~ U[0, gamma_init_max],
  /// beta ~ U[-beta_init_half_width, beta_init_half_width].
  double gamma_init_max = 0.5;
  double beta_init_half_width = 0.25;
  int greedy_traversals = 5;
  std::uint64_t seed = 0;
  std::size_t max_qubits = kDefaultMaxQubits;
  /// Worker threads for simulating the circuits of a step; 0 = hardware.
  unsigned threads = 1;

  void validate() const;
};

struct CircuitRecord {
  std::vector<double> gamma;
  std::vector<double> beta;
  double cvar = 0.0;
  double min_cost = 0.0;
  bool baseline = false;

  friend bool operator==(const CircuitRecord&, const CircuitRecord&) = default;
};

struct StepRecord {
  std::size_t stage = 0;
  std::size_t step = 0;
  std::vector<CircuitRecord> circuits;
  Bitstring best;
  double best_cost = 0.0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct StageRecord {
  std::size_t stage = 0;
  double delta = 0.0;
  std::vector<double> theta;
  std::optional<Bitstring> target;
  /// Distance between this stage's target and the previous stage's target,
  /// with the largest bias that still amplifies a state that far away.
  std::optional<std::size_t> hamming_from_previous_target;
  std::optional<double> delta_max_at_distance;

  friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

struct FinalRecord {
  std::size_t stage = 0;
  std::size_t step = 0;
  std::size_t circuit = 0;
  double raw_best_cost = 0.0;
  double post_best_cost = 0.0;

  friend bool operator==(const FinalRecord&, const FinalRecord&) = default;
};

struct RunTrace {
  std::vector<StageRecord> stages;
  std::vector<StepRecord> steps;
  FinalRecord final;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct BiasedQaoaResult {
  Bitstring best;
  double best_cost = 0.0;
  RunTrace trace;
  /// Counts of the final optimal circuit (lowest CVaR in the last stage)
  /// before and after greedy post-processing.
  SampleCounts final_raw;
  SampleCounts final_post;
  AnsatzParams final_params;
};

/// Staged biased-QAOA loop: CMA-ES over (gamma, beta) with a CVaR objective,
/// re-biasing the initial product state toward the best bitstring between
/// stages.
[[nodiscard]] BiasedQaoaResult biased_qaoa(const SpinPolynomial& poly, const StageConfig& config);

}  // namespace bqaoa
