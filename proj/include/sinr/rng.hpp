#pragma once

#include <cstdint>

namespace sinr {

// Fixed, documented generator so seeded runs reproduce across platforms and
// implementations: SplitMix64 (Steele/Lea/Flood finalizer constants).
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [lo, hi]
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  // derive an independent stream
  SplitMix64 split() { return SplitMix64(next()); }
};

}  // namespace sinr
