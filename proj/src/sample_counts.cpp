#include "bqaoa/sample_counts.hpp"

#include "bqaoa/error.hpp"

namespace bqaoa {

void SampleCounts::add(const Bitstring& b, std::uint64_t multiplicity) {
  if (b.size() != n_) throw InvalidInput("sample length does not match register size");
  if (multiplicity == 0) throw InvalidInput("sample multiplicity must be positive");
  counts_[b] += multiplicity;
  shots_ += multiplicity;
}

std::uint64_t SampleCounts::count(const Bitstring& b) const {
  auto it = counts_.find(b);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<Bitstring> SampleCounts::expand() const {
  std::vector<Bitstring> out;
  out.reserve(shots_);
  for (const auto& [b, m] : counts_) out.insert(out.end(), m, b);
  return out;
}

SampleCounts counts_from(std::size_t n, std::span<const Bitstring> shots) {
  SampleCounts out(n);
  for (const auto& b : shots) out.add(b);
  return out;
}

}  // namespace bqaoa
