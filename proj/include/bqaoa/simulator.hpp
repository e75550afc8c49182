#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bqaoa/bitstring.hpp"
#include "bqaoa/problem.hpp"
#include "bqaoa/sample_counts.hpp"

namespace bqaoa {

inline constexpr std::size_t kDefaultMaxQubits = 24;

using Amplitude = std::complex<double>;

/// Dense register state; basis index bit i is qubit i.
class Statevector {
 public:
  /// |0...0>. Throws CapacityError when n > max_qubits.
  explicit Statevector(std::size_t n, std::size_t max_qubits = kDefaultMaxQubits);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
  [[nodiscard]] double norm_squared() const noexcept;

 private:
  std::size_t n_;
  std::vector<Amplitude> amps_;
};

/// Variational parameters: theta has one angle per qubit, gamma and beta one
/// per layer.
struct AnsatzParams {
  std::vector<double> theta;
  std::vector<double> gamma;
  std::vector<double> beta;

  [[nodiscard]] std::size_t layers() const noexcept { return gamma.size(); }
};

/// C(z) tabulated over all 2^n basis states. Entry k equals
/// evaluate(poly, Bitstring::from_index(k, n)) bit for bit.
class CostDiagonal {
 public:
  explicit CostDiagonal(const SpinPolynomial& poly, std::size_t max_qubits = kDefaultMaxQubits);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] double operator[](std::uint64_t index) const noexcept { return values_[index]; }

  /// Distinct cost values and the level of each basis state; empty when the
  /// spectrum has too many distinct values to tabulate.
  [[nodiscard]] std::span<const double> levels() const noexcept { return levels_; }
  [[nodiscard]] std::span<const std::uint16_t> level_of() const noexcept { return level_of_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::vector<double> levels_;
  std::vector<std::uint16_t> level_of_;
};

/// Product state prod_i [cos(theta_i/2)|0> + sin(theta_i/2)|1>].
[[nodiscard]] Statevector prepare_initial(std::span<const double> theta, std::size_t max_qubits = kDefaultMaxQubits);

/// Multiplies each amplitude by exp(-i gamma C(z)).
void apply_cost_layer(Statevector& state, const SpinPolynomial& poly, double gamma);
void apply_cost_layer(Statevector& state, const CostDiagonal& cost, double gamma);

/// Applies exp(-i beta X) to every qubit.
void apply_mixer_layer(Statevector& state, double beta);

/// prepare_initial(theta), then a cost layer and a mixer layer per (gamma_l, beta_l).
[[nodiscard]] Statevector run_ansatz(const SpinPolynomial& poly, const AnsatzParams& params,
                                     std::size_t max_qubits = kDefaultMaxQubits);
[[nodiscard]] Statevector run_ansatz(const CostDiagonal& cost, const AnsatzParams& params,
                                     std::size_t max_qubits = kDefaultMaxQubits);

/// |amplitude(x)|^2.
[[nodiscard]] double probability(const Statevector& state, const Bitstring& x);

/// I.i.d. basis-state draws from |amplitude|^2, in draw order.
[[nodiscard]] std::vector<std::uint64_t> sample_indices(const Statevector& state, std::size_t shots,
                                                        std::uint64_t seed);
[[nodiscard]] SampleCounts sample(const Statevector& state, std::size_t shots, std::uint64_t seed);

}  // namespace bqaoa
