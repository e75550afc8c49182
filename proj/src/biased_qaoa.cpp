#include "bqaoa/biased_qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "bqaoa/bias.hpp"
#include "bqaoa/cmaes.hpp"
#include "bqaoa/cvar.hpp"
#include "bqaoa/error.hpp"
#include "bqaoa/parallel.hpp"
#include "bqaoa/postprocess.hpp"
#include "bqaoa/seeding.hpp"

namespace bqaoa {
namespace {

struct CircuitOutcome {
  std::vector<std::uint64_t> samples;
  double cvar = 0.0;
  double min_cost = 0.0;
  std::uint64_t argmin = 0;
};

CircuitOutcome run_circuit(const CostDiagonal& cost, const AnsatzParams& params, const StageConfig& config,
                           std::uint64_t seed) {
  const Statevector state = run_ansatz(cost, params, config.max_qubits);
  CircuitOutcome out;
  out.samples = sample_indices(state, config.shots, seed);
  std::vector<double> costs(out.samples.size());
  out.min_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < costs.size(); ++k) {
    costs[k] = cost[out.samples[k]];
    if (costs[k] < out.min_cost || (costs[k] == out.min_cost && out.samples[k] < out.argmin)) {
      out.min_cost = costs[k];
      out.argmin = out.samples[k];
    }
  }
  out.cvar = cvar(costs, config.alpha);
  return out;
}

AnsatzParams to_params(const std::vector<double>& theta, const Eigen::VectorXd& x, std::size_t layers) {
  AnsatzParams p;
  p.theta = theta;
  for (std::size_t l = 0; l < layers; ++l) {
    p.gamma.push_back(x[static_cast<Eigen::Index>(l)]);
    p.beta.push_back(x[static_cast<Eigen::Index>(layers + l)]);
  }
  return p;
}

SampleCounts counts_of(std::vector<std::uint64_t> samples, std::size_t n) {
  std::sort(samples.begin(), samples.end());
  SampleCounts counts(n);
  for (std::size_t k = 0; k < samples.size();) {
    std::size_t end = k;
    while (end < samples.size() && samples[end] == samples[k]) ++end;
    counts.add(Bitstring::from_index(samples[k], n), end - k);
    k = end;
  }
  return counts;
}

}  // namespace

void StageConfig::validate() const {
  if (stages < 1) throw InvalidInput("stages must be at least 1");
  if (steps_per_stage < 1) throw InvalidInput("steps per stage must be at least 1");
  if (circuits_per_step < 1) throw InvalidInput("circuits per step must be at least 1");
  if (layers > 0 && circuits_per_step < 2) throw InvalidInput("CMA-ES needs at least 2 circuits per step");
  if (shots < 1) throw InvalidInput("shots must be at least 1");
  if (bias_schedule.size() != stages) {
    throw InvalidInput("bias schedule has " + std::to_string(bias_schedule.size()) + " entries for " +
                       std::to_string(stages) + " stages");
  }
  if (bias_schedule.front() != 0.0) throw InvalidInput("the first stage must use bias 0");
  for (std::size_t s = 0; s < bias_schedule.size(); ++s) {
    const double d = bias_schedule[s];
    if (!(d >= 0.0 && d <= BiasAngle::kHalfPi)) throw InvalidInput("bias schedule entries must lie in [0, pi/2]");
    if (s > 0 && d < bias_schedule[s - 1]) throw InvalidInput("bias schedule must be non-decreasing");
  }
  if (!(sigma0 > 0.0)) throw InvalidInput("sigma0 must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidInput("CVaR alpha must lie in (0, 1]");
  if (!(gamma_init_max >= 0.0) || !(beta_init_half_width >= 0.0)) {
    throw InvalidInput("parameter initialization ranges must be non-negative");
  }
  if (greedy_traversals < 1) throw InvalidInput("greedy traversals must be at least 1");
}

BiasedQaoaResult biased_qaoa(const SpinPolynomial& poly, const StageConfig& config) {
  config.validate();
  const std::size_t n = poly.n();
  const CostDiagonal cost(poly, config.max_qubits);
  const std::size_t layers = config.layers;
  const std::size_t dim = 2 * layers;

  // Stage-start point, reused at every stage.
  Eigen::VectorXd start(static_cast<Eigen::Index>(dim));
  {
    std::mt19937_64 rng(derive_seed(config.seed, Stream::kParamInit));
    std::uniform_real_distribution<double> gamma_dist(0.0, config.gamma_init_max);
    std::uniform_real_distribution<double> beta_dist(-config.beta_init_half_width, config.beta_init_half_width);
    for (std::size_t l = 0; l < layers; ++l) start[static_cast<Eigen::Index>(l)] = gamma_dist(rng);
    for (std::size_t l = 0; l < layers; ++l) start[static_cast<Eigen::Index>(layers + l)] = beta_dist(rng);
  }
  std::vector<bool> nonnegative(dim, false);
  if (config.gamma_positive) std::fill(nonnegative.begin(), nonnegative.begin() + static_cast<std::ptrdiff_t>(layers), true);

  BiasedQaoaResult result;
  std::optional<Bitstring> best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::optional<Bitstring> previous_target;
  std::vector<double> theta(n, BiasAngle::kHalfPi);

  // Lowest-CVaR circuit of the last stage.
  double final_cvar = std::numeric_limits<double>::infinity();
  std::vector<std::uint64_t> final_samples;
  AnsatzParams final_params;

  for (std::size_t s = 0; s < config.stages; ++s) {
    StageRecord stage_record;
    stage_record.stage = s;
    stage_record.delta = config.bias_schedule[s];
    if (s > 0) {
      const Bitstring target = *best;
      theta = bias_theta(target, BiasAngle(config.bias_schedule[s]));
      if (previous_target) {
        const std::size_t h = hamming_distance(*previous_target, target);
        stage_record.hamming_from_previous_target = h;
        if (h > 0 && 2 * h < n) stage_record.delta_max_at_distance = delta_max(n, h).radians();
      }
      stage_record.target = target;
      previous_target = target;
    }
    stage_record.theta = theta;
    result.trace.stages.push_back(stage_record);

    std::optional<CmaEs> cma;
    if (dim > 0) {
      cma.emplace(start, CmaEsOptions{config.circuits_per_step, config.sigma0,
                                      derive_seed(config.seed, Stream::kCma), nonnegative});
    }
    const bool last_stage = s + 1 == config.stages;

    for (std::size_t t = 0; t < config.steps_per_stage; ++t) {
      std::vector<Eigen::VectorXd> candidates =
          cma ? cma->ask() : std::vector<Eigen::VectorXd>(config.circuits_per_step, Eigen::VectorXd(0));
      std::vector<bool> injected(candidates.size(), false);
      if (t == 0) {
        candidates[0] = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
        injected[0] = true;
      }

      std::vector<CircuitOutcome> outcomes(candidates.size());
      parallel_for(candidates.size(), config.threads, [&](std::size_t c) {
        outcomes[c] = run_circuit(cost, to_params(theta, candidates[c], layers), config,
                                  derive_seed(config.seed, Stream::kSample, {s, t, c}));
      });

      StepRecord step_record;
      step_record.stage = s;
      step_record.step = t;
      std::vector<double> fitness(candidates.size());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& o = outcomes[c];
        fitness[c] = o.cvar;
        const auto params = to_params(theta, candidates[c], layers);
        step_record.circuits.push_back({params.gamma, params.beta, o.cvar, o.min_cost, injected[c]});
        if (o.min_cost < best_cost) {
          best_cost = o.min_cost;
          best = Bitstring::from_index(o.argmin, n);
        }
        if (last_stage && o.cvar < final_cvar) {
          final_cvar = o.cvar;
          final_samples = o.samples;
          final_params = params;
          result.trace.final.stage = s;
          result.trace.final.step = t;
          result.trace.final.circuit = c;
        }
      }
      if (cma) cma->tell(candidates, fitness, injected);
      if (!last_stage && t + 1 == config.steps_per_stage) {
        // The next stage's bias target is the greedy-refined best.
        Bitstring refined = greedy_pass(*best, poly, derive_seed(config.seed, Stream::kTargetGreedy, {s}),
                                        config.greedy_traversals);
        const double refined_cost = evaluate(poly, refined);
        if (refined_cost < best_cost) {
          best_cost = refined_cost;
          best = std::move(refined);
        }
      }
      step_record.best = *best;
      step_record.best_cost = best_cost;
      result.trace.steps.push_back(std::move(step_record));
    }
  }

  result.final_raw = counts_of(std::move(final_samples), n);
  result.final_post = postprocess_counts(
      result.final_raw, poly,
      GreedyConfig{config.greedy_traversals, 1, derive_seed(config.seed, Stream::kPostprocess)});
  result.final_params = std::move(final_params);
  result.trace.final.raw_best_cost = std::numeric_limits<double>::infinity();
  for (const auto& [bits, m] : result.final_raw) {
    result.trace.final.raw_best_cost = std::min(result.trace.final.raw_best_cost, evaluate(poly, bits));
  }
  result.trace.final.post_best_cost = std::numeric_limits<double>::infinity();
  for (const auto& [bits, m] : result.final_post) {
    const double c = evaluate(poly, bits);
    result.trace.final.post_best_cost = std::min(result.trace.final.post_best_cost, c);
    if (c < best_cost) {
      best_cost = c;
      best = bits;
    }
  }
  result.best = *best;
  result.best_cost = best_cost;
  return result;
}

}  // namespace bqaoa
