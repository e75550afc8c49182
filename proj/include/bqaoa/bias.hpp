#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "bqaoa/bitstring.hpp"

namespace bqaoa {

/// Bias angle delta in [0, pi/2], stored together with its complement
/// pi/2 - delta so that 1 - sin(delta) stays accurate when delta is within
/// rounding distance of pi/2 (large n, small Hamming distance).
class BiasAngle {
 public:
  static constexpr double kHalfPi = std::numbers::pi / 2.0;

  BiasAngle(double radians = 0.0) : radians_(radians), complement_(kHalfPi - radians) {}  // NOLINT
  static BiasAngle from_complement(double complement) { return {kHalfPi - complement, complement}; }

  [[nodiscard]] double radians() const noexcept { return radians_; }
  [[nodiscard]] double complement() const noexcept { return complement_; }
  [[nodiscard]] double sine() const;
  /// 1 - sin(delta), computed from the complement.
  [[nodiscard]] double one_minus_sine() const;
  /// Probability that a biased qubit measures its target value: (1 + sin delta) / 2.
  [[nodiscard]] double target_probability() const;

 private:
  BiasAngle(double radians, double complement) : radians_(radians), complement_(complement) {}

  double radians_;
  double complement_;
};

/// theta_i = pi/2 - delta when target bit i is 0, pi/2 + delta when it is 1.
[[nodiscard]] std::vector<double> bias_theta(const Bitstring& target, BiasAngle delta);

/// Probability of a basis state at Hamming distance h from the target in the
/// n-qubit biased product state:
///   ((1 + sin d) / 2)^n * ((1 - sin d) / (1 + sin d))^h.
[[nodiscard]] double amplitude_sq(std::size_t n, BiasAngle delta, std::size_t h);

/// The bias maximizing amplitude_sq at distance h: arcsin((n - 2h) / n).
/// Requires 2h <= n.
[[nodiscard]] BiasAngle delta_opt(std::size_t n, std::size_t h);

/// Largest bias for which a state at distance h keeps probability >= 2^-n:
/// the root in (0, pi/2) of (n - h) ln(1 + sin d) + h ln(1 - sin d) = 0.
/// Requires 0 < 2h < n; h = 0 returns pi/2 since the target never loses mass.
[[nodiscard]] BiasAngle delta_max(std::size_t n, std::size_t h);

}  // namespace bqaoa
