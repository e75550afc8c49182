#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bqaoa/bitstring.hpp"

namespace bqaoa {

/// Multiset of measured bitstrings. Iteration is in lexicographic bit order.
class SampleCounts {
 public:
  using Map = std::map<Bitstring, std::uint64_t>;

  SampleCounts() = default;
  explicit SampleCounts(std::size_t n) : n_(n) {}

  /// Requires multiplicity >= 1 and b.size() == n().
  void add(const Bitstring& b, std::uint64_t multiplicity = 1);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t shots() const noexcept { return shots_; }
  [[nodiscard]] std::size_t support_size() const noexcept { return counts_.size(); }
  [[nodiscard]] bool empty() const noexcept { return counts_.empty(); }
  [[nodiscard]] std::uint64_t count(const Bitstring& b) const;
  [[nodiscard]] const Map& map() const noexcept { return counts_; }
  [[nodiscard]] Map::const_iterator begin() const noexcept { return counts_.begin(); }
  [[nodiscard]] Map::const_iterator end() const noexcept { return counts_.end(); }

  /// Every shot as its own entry, in iteration order.
  [[nodiscard]] std::vector<Bitstring> expand() const;

  friend bool operator==(const SampleCounts&, const SampleCounts&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t shots_ = 0;
  Map counts_;
};

[[nodiscard]] SampleCounts counts_from(std::size_t n, std::span<const Bitstring> shots);

}  // namespace bqaoa
