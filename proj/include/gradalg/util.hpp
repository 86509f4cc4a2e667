/**
 * @file gradalg/util.hpp
 * @copyright Apache License 2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gradalg {

/// Default seed for every pseudorandom choice in the library.  Recorded in
/// certificates so reruns can be reproduced bit for bit.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Deterministic 64-bit generator (splitmix64).  Not cryptographic; used only
/// to pick candidate elements in splitting routines.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

/// FNV-1a over a byte string; used to derive per-object seeds canonically.
inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gradalg
