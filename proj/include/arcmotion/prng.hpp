#ifndef ARCMOTION_PRNG_HPP
#define ARCMOTION_PRNG_HPP

/*
 * Deterministic sampling.  Monte Carlo runs draw from fixed-size chunks of
 * 4096 samples; chunk c is seeded from (seed, c) alone, so results do not
 * depend on how chunks are distributed over worker threads.
 */

#include <cstdint>

#include "arcmotion/region.hpp"

namespace arcmotion {

inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Prng {
 public:
  explicit Prng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /* uniform in [0, 1) with 53 random bits */
  double uniform01() { return (double)(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

 private:
  uint64_t state_;
};

constexpr uint64_t kMcChunk = 4096;

/* generator for chunk c of the stream identified by seed */
inline Prng chunk_prng(uint64_t seed, uint64_t chunk) {
  return Prng(mix64(seed ^ mix64(chunk ^ 0xA5A5A5A5A5A5A5A5ull)));
}

inline Point<double> sample_in_box(Prng &rng, const Box<double> &box) {
  return Point<double>(rng.uniform(box.xmin, box.xmax), rng.uniform(box.ymin, box.ymax));
}

}  // namespace arcmotion

#endif
