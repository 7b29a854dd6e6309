#pragma once

#include <cstdint>

#include "rational.hpp"

namespace hfreg {

/// splitmix64: tiny, platform-independent, identical output for a given seed
/// on every standard library / compiler.  All randomized paths in the project
/// derive from this so transcripts are reproducible from (seed, config).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via rejection sampling; bound > 0.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Bernoulli(p) for exact rational p in [0,1]; exact comparison, no floats.
  bool bernoulli(const Rational& p) {
    uint64_t r = next();
    // r/2^64 < p  <=>  r * den < num * 2^64
    Int lhs = Int(r) * denominator(p);
    Int rhs = numerator(p) << 64;
    return lhs < rhs;
  }

  /// Deterministic substream derivation (worker w of a seeded run).
  static uint64_t substream_seed(uint64_t seed, uint64_t stream) {
    Rng r(seed ^ (0x6a09e667f3bcc909ULL * (stream + 1)));
    return r.next();
  }

 private:
  uint64_t state_;
};

}  // namespace hfreg
