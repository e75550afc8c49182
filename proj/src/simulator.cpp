#include "bqaoa/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <unordered_map>

#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

void check_capacity(std::size_t n, std::size_t max_qubits) {
  if (n > max_qubits) {
    throw CapacityError(std::to_string(n) + " qubits exceeds the simulable maximum of " + std::to_string(max_qubits));
  }
  if (n >= 63) throw CapacityError("register too large for 64-bit basis indices");
}

void check_params(std::size_t n, const AnsatzParams& params) {
  if (params.theta.size() != n) throw InvalidInput("theta length does not match qubit count");
  if (params.beta.size() != params.gamma.size()) throw InvalidInput("gamma and beta lengths differ");
}

constexpr std::size_t kMaxLevels = 4096;

}  // namespace

Statevector::Statevector(std::size_t n, std::size_t max_qubits) : n_(n) {
  check_capacity(n, max_qubits);
  amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

double Statevector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

CostDiagonal::CostDiagonal(const SpinPolynomial& poly, std::size_t max_qubits) : n_(poly.n()) {
  check_capacity(n_, max_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n_;
  struct MaskedTerm {
    std::uint64_t mask;
    double coeff;
  };
  std::vector<MaskedTerm> terms;
  for (const auto& t : poly.terms()) {
    std::uint64_t mask = 0;
    for (VarIndex v : t.vars) mask |= std::uint64_t{1} << v;
    terms.push_back({mask, t.coeff});
  }
  values_.resize(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    // A term is negated when an odd number of its spins are -1 (bit 0).
    double sum = 0.0;
    for (const auto& t : terms) sum += (std::popcount(~k & t.mask) & 1) ? -t.coeff : t.coeff;
    values_[k] = sum;
  }

  std::unordered_map<double, std::uint16_t> level_index;
  std::vector<std::uint16_t> level_of(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    auto [it, inserted] = level_index.try_emplace(values_[k], static_cast<std::uint16_t>(levels_.size()));
    if (inserted) {
      if (levels_.size() >= kMaxLevels) {
        levels_.clear();
        return;
      }
      levels_.push_back(values_[k]);
    }
    level_of[k] = it->second;
  }
  level_of_ = std::move(level_of);
}

Statevector prepare_initial(std::span<const double> theta, std::size_t max_qubits) {
  Statevector state(theta.size(), max_qubits);
  auto amps = state.amplitudes();
  std::size_t filled = 1;
  for (std::size_t q = 0; q < theta.size(); ++q) {
    const double c = std::cos(theta[q] / 2.0);
    const double s = std::sin(theta[q] / 2.0);
    for (std::size_t k = 0; k < filled; ++k) {
      amps[k + filled] = amps[k] * s;
      amps[k] *= c;
    }
    filled <<= 1;
  }
  return state;
}

void apply_cost_layer(Statevector& state, const SpinPolynomial& poly, double gamma) {
  if (poly.n() != state.n()) throw InvalidInput("cost layer: polynomial size does not match register");
  apply_cost_layer(state, CostDiagonal(poly, state.n()), gamma);
}

void apply_cost_layer(Statevector& state, const CostDiagonal& cost, double gamma) {
  if (cost.n() != state.n()) throw InvalidInput("cost layer: diagonal size does not match register");
  if (gamma == 0.0) return;
  auto amps = state.amplitudes();
  if (!cost.levels().empty()) {
    std::vector<Amplitude> phase(cost.levels().size());
    for (std::size_t l = 0; l < phase.size(); ++l) phase[l] = std::polar(1.0, -gamma * cost.levels()[l]);
    const auto level_of = cost.level_of();
    for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= phase[level_of[k]];
    return;
  }
  const auto values = cost.values();
  for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= std::polar(1.0, -gamma * values[k]);
}

void apply_mixer_layer(Statevector& state, double beta) {
  if (beta == 0.0) return;
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  auto amps = state.amplitudes();
  const std::size_t dim = amps.size();
  for (std::size_t q = 0; q < state.n(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t k = base; k < base + stride; ++k) {
        const Amplitude a0 = amps[k];
        const Amplitude a1 = amps[k + stride];
        // [c, -is; -is, c]
        amps[k] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        amps[k + stride] = {c * a1.real() + s * a0.imag(), c * a1.imag() - s * a0.real()};
      }
    }
  }
}

Statevector run_ansatz(const SpinPolynomial& poly, const AnsatzParams& params, std::size_t max_qubits) {
  check_capacity(poly.n(), max_qubits);
  if (params.layers() == 0) {
    check_params(poly.n(), params);
    return prepare_initial(params.theta, max_qubits);
  }
  return run_ansatz(CostDiagonal(poly, max_qubits), params, max_qubits);
}

Statevector run_ansatz(const CostDiagonal& cost, const AnsatzParams& params, std::size_t max_qubits) {
  check_params(cost.n(), params);
  Statevector state = prepare_initial(params.theta, max_qubits);
  for (std::size_t l = 0; l < params.layers(); ++l) {
    apply_cost_layer(state, cost, params.gamma[l]);
    apply_mixer_layer(state, params.beta[l]);
  }
  return state;
}

double probability(const Statevector& state, const Bitstring& x) {
  if (x.size() != state.n()) throw InvalidInput("bitstring length does not match register");
  return std::norm(state.amplitudes()[x.to_index()]);
}

std::vector<std::uint64_t> sample_indices(const Statevector& state, std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw InvalidInput("shots must be at least 1");
  const auto amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    acc += std::norm(amps[k]);
    cdf[k] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, acc);
  std::vector<std::uint64_t> out(shots);
  for (auto& idx : out) {
    const double u = uniform(rng);
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cdf.begin());
    // u can round up to the total; fall back to the last state with mass.
    if (k == cdf.size()) {
      k = cdf.size() - 1;
      while (k > 0 && std::norm(amps[k]) == 0.0) --k;
    }
    idx = k;
  }
  return out;
}

SampleCounts sample(const Statevector& state, std::size_t shots, std::uint64_t seed) {
  auto indices = sample_indices(state, shots, seed);
  std::sort(indices.begin(), indices.end());
  SampleCounts counts(state.n());
  for (std::size_t k = 0; k < indices.size();) {
    std::size_t end = k;
    while (end < indices.size() && indices[end] == indices[k]) ++end;
    counts.add(Bitstring::from_index(indices[k], state.n()), end - k);
    k = end;
  }
  return counts;
}

}  // namespace bqaoa
