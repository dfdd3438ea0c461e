#ifndef IFSG_RNG_HPP
#define IFSG_RNG_HPP

#include <cstdint>

namespace ifsg {

/// SplitMix64: 64 bits of state, fully specified here so that sampled runs
/// reproduce bit-for-bit on any platform.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

  constexpr std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n) by rejection, no modulo bias.
  constexpr std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r = next();
    while (r < threshold) r = next();
    return r % n;
  }
};

}  // namespace ifsg

#endif
