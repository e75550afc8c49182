#pragma once

#include <cstdint>
#include <initializer_list>

namespace bqaoa {

/// Independent random streams carved out of one master seed.
enum class Stream : std::uint64_t {
  kSample = 1,
  kCma = 2,
  kParamInit = 3,
  kTargetGreedy = 4,
  kPostprocess = 5,
  kLocalInit = 6,
  kLocalPass = 7,
  kRandomBaseline = 8,
  kCoefficients = 9,
  kGraph = 10,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based derivation: the seed for (stream, i, j, k) depends only on
/// those values, never on how many draws other streams consumed.
constexpr std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                    std::initializer_list<std::uint64_t> path = {}) noexcept {
  std::uint64_t h = splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(stream)));
  for (std::uint64_t p : path) h = splitmix64(h ^ splitmix64(p + 0x632BE59BD9B4E019ULL));
  return h;
}

}  // namespace bqaoa
