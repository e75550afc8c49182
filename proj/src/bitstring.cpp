#include "bqaoa/bitstring.hpp"

#include "bqaoa/error.hpp"

namespace bqaoa {

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw InvalidInput("bitstring entries must be 0 or 1");
  }
}

Bitstring Bitstring::from_index(std::uint64_t index, std::size_t n) {
  if (n > 64) throw InvalidInput("from_index supports at most 64 bits");
  Bitstring out(n);
  for (std::size_t i = 0; i < n; ++i) out.bits_[i] = static_cast<std::uint8_t>((index >> i) & 1U);
  return out;
}

Bitstring Bitstring::parse(std::string_view text) {
  Bitstring out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') {
      out.bits_[i] = 0;
    } else if (text[i] == '1') {
      out.bits_[i] = 1;
    } else {
      throw InvalidInput("bitstring must contain only '0' and '1': " + std::string(text));
    }
  }
  return out;
}

std::uint64_t Bitstring::to_index() const {
  if (bits_.size() > 64) throw InvalidInput("to_index supports at most 64 bits");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) index |= static_cast<std::uint64_t>(bits_[i]) << i;
  return index;
}

std::string Bitstring::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
  return s;
}

Bitstring flipped(Bitstring x, std::size_t i) {
  if (i >= x.size()) throw InvalidInput("flip index out of range");
  x.flip(i);
  return x;
}

std::size_t hamming_distance(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) throw InvalidInput("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

}  // namespace bqaoa
