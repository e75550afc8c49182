#include "bqaoa/postprocess.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bqaoa/error.hpp"
#include "bqaoa/seeding.hpp"

namespace bqaoa {

void GreedyConfig::validate() const {
  if (max_traversals < 1) throw InvalidInput("max_traversals must be at least 1");
  if (restarts < 1) throw InvalidInput("restarts must be at least 1");
}

GreedyResult greedy_descent(const Bitstring& x, const SpinPolynomial& poly, const TermIndex& index,
                            std::uint64_t seed, int max_traversals) {
  if (x.size() != poly.n()) throw InvalidInput("bitstring length does not match polynomial size");
  if (max_traversals < 1) throw InvalidInput("max_traversals must be at least 1");
  GreedyResult result{x, false, 0, 0};
  std::vector<std::size_t> order(poly.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  while (result.traversals < max_traversals) {
    std::shuffle(order.begin(), order.end(), rng);
    ++result.traversals;
    bool moved = false;
    for (std::size_t i : order) {
      if (delta_evaluate(poly, result.bits, i, index) < 0.0) {
        result.bits.flip(i);
        ++result.flips;
        moved = true;
      }
    }
    if (!moved) {
      result.converged = true;
      break;
    }
  }
  return result;
}

Bitstring greedy_pass(const Bitstring& x, const SpinPolynomial& poly, std::uint64_t seed, int max_traversals) {
  const TermIndex index(poly);
  return greedy_descent(x, poly, index, seed, max_traversals).bits;
}

std::vector<Bitstring> local_solver(const SpinPolynomial& poly, std::size_t samples, const GreedyConfig& config) {
  config.validate();
  if (samples == 0) throw InvalidInput("local solver needs at least one sample");
  const TermIndex index(poly);
  std::mt19937_64 init_rng(derive_seed(config.seed, Stream::kLocalInit));
  std::vector<Bitstring> out;
  out.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    Bitstring x(poly.n());
    for (std::size_t i = 0; i < poly.n(); ++i) x.set(i, (init_rng() >> 63) != 0);
    Bitstring best = x;
    double best_cost = evaluate(poly, x);
    for (int k = 0; k < config.restarts; ++k) {
      const auto seed = derive_seed(config.seed, Stream::kLocalPass, {s, static_cast<std::uint64_t>(k)});
      auto candidate = greedy_descent(x, poly, index, seed, config.max_traversals).bits;
      const double cost = evaluate(poly, candidate);
      if (cost < best_cost) {
        best_cost = cost;
        best = std::move(candidate);
      }
    }
    out.push_back(std::move(best));
  }
  return out;
}

SampleCounts postprocess_counts(const SampleCounts& counts, const SpinPolynomial& poly, const GreedyConfig& config) {
  config.validate();
  if (counts.n() != poly.n()) throw InvalidInput("counts register size does not match polynomial size");
  const TermIndex index(poly);
  SampleCounts out(poly.n());
  std::uint64_t ordinal = 0;
  for (const auto& [bits, multiplicity] : counts) {
    for (std::uint64_t m = 0; m < multiplicity; ++m, ++ordinal) {
      const auto seed = derive_seed(config.seed, Stream::kPostprocess, {ordinal});
      out.add(greedy_descent(bits, poly, index, seed, config.max_traversals).bits);
    }
  }
  return out;
}

}  // namespace bqaoa
