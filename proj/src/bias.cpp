#include "bqaoa/bias.hpp"

#include <cmath>
#include <string>

#include "bqaoa/error.hpp"

namespace bqaoa {
namespace {

void check_range(BiasAngle delta) {
  if (!(delta.radians() >= 0.0 && delta.complement() >= 0.0)) {
    throw InvalidInput("bias angle " + std::to_string(delta.radians()) + " outside [0, pi/2]");
  }
}

// (n - h) ln(2 - u) + h ln(u), u = 1 - sin(delta).
double root_function(double n, double h, double log_u) {
  const double u = std::exp(log_u);
  return (n - h) * std::log1p(1.0 - u) + h * log_u;
}

}  // namespace

double BiasAngle::sine() const { return std::cos(complement_); }

double BiasAngle::one_minus_sine() const {
  const double s = std::sin(complement_ / 2.0);
  return 2.0 * s * s;
}

double BiasAngle::target_probability() const { return 1.0 - one_minus_sine() / 2.0; }

std::vector<double> bias_theta(const Bitstring& target, BiasAngle delta) {
  check_range(delta);
  std::vector<double> theta(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    theta[i] = target[i] ? BiasAngle::kHalfPi + delta.radians() : BiasAngle::kHalfPi - delta.radians();
  }
  return theta;
}

double amplitude_sq(std::size_t n, BiasAngle delta, std::size_t h) {
  check_range(delta);
  if (h > n) throw InvalidInput("Hamming distance exceeds register size");
  const double u = delta.one_minus_sine();
  if (u == 0.0) return h == 0 ? 1.0 : 0.0;
  const double log_p = static_cast<double>(n) * std::log1p(-u / 2.0) +
                       static_cast<double>(h) * (std::log(u) - std::log1p(1.0 - u));
  return std::exp(log_p);
}

BiasAngle delta_opt(std::size_t n, std::size_t h) {
  if (n == 0) throw InvalidInput("delta_opt needs n >= 1");
  if (2 * h > n) {
    throw NoPositiveRoot("delta_opt: h=" + std::to_string(h) + " exceeds n/2 for n=" + std::to_string(n));
  }
  if (2 * h == n) return BiasAngle(0.0);
  // 1 - sin(delta_opt) = 2h/n, so the complement is 2 asin(sqrt(h/n)).
  const double ratio = static_cast<double>(h) / static_cast<double>(n);
  return BiasAngle::from_complement(2.0 * std::asin(std::sqrt(ratio)));
}

BiasAngle delta_max(std::size_t n, std::size_t h) {
  if (n == 0) throw InvalidInput("delta_max needs n >= 1");
  if (h == 0) return BiasAngle(BiasAngle::kHalfPi);
  if (2 * h >= n) {
    throw NoPositiveRoot("delta_max: no positive root for h=" + std::to_string(h) + ", n=" + std::to_string(n));
  }
  const double nd = static_cast<double>(n);
  const double hd = static_cast<double>(h);
  // Bisect on log(1 - sin delta). The function is concave in u with its
  // maximum at u = 2h/n (delta_opt), where it is positive, and it is
  // negative below u = 2^{-(n-h)/h}.
  double hi = std::log(2.0 * hd / nd);
  double lo = -(nd - hd) / hd * std::log(2.0) - 1.0;
  for (int it = 0; it < 2000 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (root_function(nd, hd, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double u = std::exp(0.5 * (lo + hi));
  return BiasAngle::from_complement(2.0 * std::asin(std::sqrt(u / 2.0)));
}

}  // namespace bqaoa
