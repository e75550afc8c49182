#include "bqaoa/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "bqaoa/error.hpp"
#include "bqaoa/parallel.hpp"
#include "bqaoa/seeding.hpp"

namespace bqaoa {
namespace {

struct ChunkResult {
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = -std::numeric_limits<double>::infinity();
  std::uint64_t argmax = 0;
  std::vector<std::uint64_t> argmins;
  std::uint64_t argmin_count = 0;
};

// Flat per-variable term lists with the current sign of each term, so a flip
// costs O(terms containing the variable).
struct GrayWalker {
  std::vector<double> coeff;
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> entries;
  std::vector<std::uint64_t> masks;

  explicit GrayWalker(const SpinPolynomial& poly) {
    const TermIndex index(poly);
    for (const auto& t : poly.terms()) {
      coeff.push_back(t.coeff);
      std::uint64_t mask = 0;
      for (VarIndex v : t.vars) mask |= std::uint64_t{1} << v;
      masks.push_back(mask);
    }
    offsets.push_back(0);
    for (std::size_t v = 0; v < poly.n(); ++v) {
      for (auto k : index.terms_of(v)) entries.push_back(k);
      offsets.push_back(static_cast<std::uint32_t>(entries.size()));
    }
  }

  ChunkResult walk(std::uint64_t high_bits, std::size_t low_count, std::size_t max_stored, double tol) const {
    std::vector<double> signed_coeff(coeff.size());
    double value = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      signed_coeff[k] = (std::popcount(~high_bits & masks[k]) & 1) ? -coeff[k] : coeff[k];
      value += signed_coeff[k];
    }
    ChunkResult r;
    std::uint64_t state = high_bits;
    auto visit = [&] {
      if (value > r.cmax) {
        r.cmax = value;
        r.argmax = state;
      }
      if (value < r.cmin - tol) {
        r.cmin = value;
        r.argmins.clear();
        r.argmin_count = 0;
      }
      if (value <= r.cmin + tol) {
        if (value < r.cmin) r.cmin = value;
        ++r.argmin_count;
        if (r.argmins.size() < max_stored) r.argmins.push_back(state);
      }
    };
    visit();
    const std::uint64_t steps = std::uint64_t{1} << low_count;
    for (std::uint64_t g = 1; g < steps; ++g) {
      const auto var = static_cast<std::size_t>(std::countr_zero(g));
      double delta = 0.0;
      for (std::uint32_t e = offsets[var]; e < offsets[var + 1]; ++e) {
        const auto k = entries[e];
        delta += signed_coeff[k];
        signed_coeff[k] = -signed_coeff[k];
      }
      value -= 2.0 * delta;
      state ^= std::uint64_t{1} << var;
      visit();
    }
    return r;
  }
};

}  // namespace

ExactResult brute_force(const SpinPolynomial& poly, const BruteForceOptions& options) {
  const std::size_t n = poly.n();
  if (n > options.max_qubits) {
    throw CapacityError(std::to_string(n) + " variables exceeds the enumeration cap of " +
                        std::to_string(options.max_qubits));
  }
  if (n >= 63) throw CapacityError("enumeration limited to 62 variables");
  const GrayWalker walker(poly);
  // Incremental sums drift by a few ulps; ties are resolved within tol and
  // the final values re-evaluated exactly.
  const double tol = 1e-9 * std::max(1.0, poly.coefficient_l1());
  const std::size_t high = std::min<std::size_t>(n, 6);
  const std::size_t low = n - high;
  const std::size_t chunks = std::size_t{1} << high;
  std::vector<ChunkResult> parts(chunks);
  parallel_for(chunks, options.threads, [&](std::size_t c) {
    parts[c] = walker.walk(static_cast<std::uint64_t>(c) << low, low, options.max_stored_argmins, tol);
  });

  ExactResult out;
  out.cmin = std::numeric_limits<double>::infinity();
  out.cmax = -std::numeric_limits<double>::infinity();
  std::uint64_t argmax = 0;
  for (const auto& p : parts) {
    out.cmin = std::min(out.cmin, p.cmin);
    if (p.cmax > out.cmax) {
      out.cmax = p.cmax;
      argmax = p.argmax;
    }
  }
  out.cmax = evaluate(poly, Bitstring::from_index(argmax, n));
  std::vector<std::uint64_t> candidates;
  for (const auto& p : parts) {
    if (p.cmin > out.cmin + tol) continue;
    out.argmin_count += p.argmin_count;
    for (auto s : p.argmins) {
      if (candidates.size() < options.max_stored_argmins) candidates.push_back(s);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [n](std::uint64_t a, std::uint64_t b) {
    return Bitstring::from_index(a, n) < Bitstring::from_index(b, n);
  });
  double exact_min = std::numeric_limits<double>::infinity();
  std::vector<double> values;
  values.reserve(candidates.size());
  for (auto s : candidates) {
    values.push_back(evaluate(poly, Bitstring::from_index(s, n)));
    exact_min = std::min(exact_min, values.back());
  }
  out.cmin = exact_min;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (values[k] <= exact_min + tol) out.argmins.push_back(Bitstring::from_index(candidates[k], n));
  }
  return out;
}

double approximation_ratio(double cost, double cmin, double cmax) {
  if (!(cmin < cmax)) throw DegenerateInstance("approximation ratio undefined: Cmin == Cmax");
  return (cost - cmax) / (cmin - cmax);
}

RunSummary summarize(const SampleCounts& counts, const SpinPolynomial& poly, const ExactResult& exact) {
  if (counts.empty()) throw InvalidInput("cannot summarize empty counts");
  if (counts.n() != poly.n()) throw InvalidInput("counts register size does not match instance");
  RunSummary s;
  s.shots = counts.shots();
  s.best = std::numeric_limits<double>::infinity();
  double total = 0.0;
  double total_ar = 0.0;
  std::vector<double> costs;
  costs.reserve(counts.support_size());
  for (const auto& [bits, m] : counts) {
    const double c = evaluate(poly, bits);
    costs.push_back(c);
    s.best = std::min(s.best, c);
    total += c * static_cast<double>(m);
    total_ar += approximation_ratio(c, exact.cmin, exact.cmax) * static_cast<double>(m);
  }
  const double tol = 1e-9 * std::max(1.0, poly.coefficient_l1());
  std::size_t k = 0;
  for (const auto& [bits, m] : counts) {
    if (costs[k] <= s.best + tol) {
      s.count += m;
      s.top_solutions.push_back({bits, m});
    }
    if (costs[k] <= exact.cmin + tol) ++s.unique_optimal;
    ++k;
  }
  s.best_ar = approximation_ratio(s.best, exact.cmin, exact.cmax);
  s.likelihood = static_cast<double>(s.count) / static_cast<double>(s.shots);
  s.mean = total / static_cast<double>(s.shots);
  s.mean_ar = total_ar / static_cast<double>(s.shots);
  return s;
}

std::vector<CdfPoint> ar_cdf(const SampleCounts& counts, const SpinPolynomial& poly, const ExactResult& exact) {
  if (counts.n() != poly.n()) throw InvalidInput("counts register size does not match instance");
  std::map<double, std::uint64_t> by_level;
  for (const auto& [bits, m] : counts) {
    by_level[approximation_ratio(evaluate(poly, bits), exact.cmin, exact.cmax)] += m;
  }
  std::vector<CdfPoint> out;
  out.reserve(by_level.size());
  std::uint64_t at_or_above = counts.shots();
  for (const auto& [level, m] : by_level) {
    out.push_back({static_cast<double>(at_or_above) / static_cast<double>(counts.shots()), level});
    at_or_above -= m;
  }
  return out;
}

double fraction_at_least(const std::vector<CdfPoint>& cdf, double level) {
  for (const auto& p : cdf) {
    if (p.ar >= level) return p.fraction;
  }
  return 0.0;
}

SampleCounts random_baseline(const SpinPolynomial& poly, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw InvalidInput("random baseline needs at least one sample");
  std::mt19937_64 rng(derive_seed(seed, Stream::kRandomBaseline));
  SampleCounts out(poly.n());
  for (std::size_t s = 0; s < samples; ++s) {
    Bitstring x(poly.n());
    for (std::size_t i = 0; i < poly.n(); ++i) x.set(i, (rng() >> 63) != 0);
    out.add(x);
  }
  return out;
}

}  // namespace bqaoa
