#include "bqaoa/cvar.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bqaoa/error.hpp"

namespace bqaoa {

void CvarConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidInput("CVaR alpha must lie in (0, 1]");
}

double cvar(std::span<const double> costs, double alpha) {
  CvarConfig{alpha}.validate();
  if (costs.empty()) throw InvalidInput("CVaR of an empty sample");
  const auto m = costs.size();
  // Shave a few ulps so alpha * m landing a hair above an integer (0.35 * 20)
  // does not pull in an extra sample.
  auto k = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(m) * (1.0 - 1e-12)));
  k = std::clamp<std::size_t>(k, 1, m);
  std::vector<double> sorted(costs.begin(), costs.end());
  std::partial_sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k), sorted.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += sorted[i];
  return sum / static_cast<double>(k);
}

}  // namespace bqaoa
