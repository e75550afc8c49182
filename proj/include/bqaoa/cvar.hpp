#pragma once

#include <span>

namespace bqaoa {

struct CvarConfig {
  double alpha = 0.35;

  void validate() const;
};

/// Mean of the ceil(alpha * m) smallest of the m costs.
[[nodiscard]] double cvar(std::span<const double> costs, double alpha);

}  // namespace bqaoa
