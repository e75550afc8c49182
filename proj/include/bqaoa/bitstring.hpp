#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bqaoa {

/// Length-n assignment of binary variables. Bit i maps to spin z_i = 2 x_i - 1
/// and to qubit i of the simulated register (basis index bit i).
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t n) : bits_(n, 0) {}
  explicit Bitstring(std::vector<std::uint8_t> bits);

  /// Bit i of `index` becomes bit i of the result.
  static Bitstring from_index(std::uint64_t index, std::size_t n);
  /// Parses "0110..." where character i is bit i.
  static Bitstring parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) noexcept { bits_[i] ^= 1; }

  /// Requires size() <= 64.
  [[nodiscard]] std::uint64_t to_index() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend auto operator<=>(const Bitstring&, const Bitstring&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

[[nodiscard]] Bitstring flipped(Bitstring x, std::size_t i);
[[nodiscard]] std::size_t hamming_distance(const Bitstring& a, const Bitstring& b);

}  // namespace bqaoa
