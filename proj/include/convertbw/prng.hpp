#pragma once

#include <cstdint>
#include <string_view>

namespace convertbw {

/// SplitMix64 generator. All randomness in the project flows through this so
/// that a single 64-bit seed reproduces every fixture and test draw; derived
/// streams are obtained by hashing a label into the seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * (~0ull / n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::uint64_t state_;
};

/// FNV-1a over a label, for deriving independent sub-streams from one seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ull;
  };
  for (char ch : label) mix(static_cast<unsigned char>(ch));
  for (int i = 0; i < 8; ++i) mix((seed >> (8 * i)) & 0xFF);
  for (int i = 0; i < 8; ++i) mix((index >> (8 * i)) & 0xFF);
  return h;
}

}  // namespace convertbw
