#pragma once

#include <cstdint>

namespace heavymom {

// splitmix64: tiny counter-style generator with a stable cross-platform stream.
// Every random quantity in the project flows through this so runs are replayable
// from a single seed.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform on [0,1) with 53 random bits
  double next_unit() { return (double)(next() >> 11) * 0x1.0p-53; }
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }  // test-grade
};

// Independent stream per replicate: hash the pair (base, r) once through the
// generator so neighbouring replicate ids do not share prefixes.
inline std::uint64_t replicate_seed(std::uint64_t base, std::uint64_t r) {
  SplitMix64 g(base ^ (0x9E3779B97F4A7C15ULL * (r + 1)));
  return g.next();
}

}  // namespace heavymom
