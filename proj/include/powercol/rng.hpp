#pragma once

#include <cstdint>

namespace powercol {

/// Counter-based splittable generator (splitmix64 finalizer over a strided
/// counter). Value streams depend only on (seed, counter), which makes every
/// generated corpus bit-reproducible, including across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : seed_(seed) {}

  uint64_t next() { return at(counter_++); }

  /// Unbiased value in [0, bound) via power-of-two mask rejection.
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t mask = ~uint64_t{0} >> __builtin_clzll(bound - 1 | 1);
    for (;;) {
      uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  /// Independent child stream, deterministic in the parent state.
  SplitMix64 split() { return SplitMix64(mix(next() ^ kGamma)); }

 private:
  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t at(uint64_t counter) const { return mix(seed_ + (counter + 1) * kGamma); }

  uint64_t seed_;
  uint64_t counter_ = 0;
};

}  // namespace powercol
