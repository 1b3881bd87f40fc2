#pragma once

#include <cstdint>
#include <vector>

#include <sdreal/oracle.hpp>
#include <sdreal/stream.hpp>

namespace testutil {

// Deterministic xorshift64*; property tests must be reproducible.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dULL;
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// A random rational in [-1, 1]. Mixes coarse, fine and dyadic denominators
// so boundary digit patterns show up.
inline sdreal::Rat random_rat(Rng& rng) {
  using sdreal::Int;
  using sdreal::Rat;
  std::uint64_t den;
  switch (rng.below(4)) {
    case 0:
      den = 1 + rng.below(16);
      break;
    case 1:
      den = std::uint64_t(1) << rng.below(30);
      break;
    default:
      den = 1 + rng.below(std::uint64_t(1) << 40);
      break;
  }
  Int d(den);
  Int num(rng.below(2 * den + 1));
  num -= Int(den);
  return Rat(num, d);
}

// A random rational in [lo, hi].
inline sdreal::Rat random_rat_in(Rng& rng, const sdreal::Rat& lo,
                                 const sdreal::Rat& hi) {
  constexpr std::uint64_t grid = std::uint64_t(1) << 48;
  sdreal::Rat t(sdreal::Int(rng.below(grid + 1)), sdreal::Int(grid));
  return lo + t * (hi - lo);
}

inline bool same_prefix(const sdreal::Stream& a, const sdreal::Stream& b,
                        std::size_t n) {
  return prefix(a, n) == prefix(b, n);
}

}  // namespace testutil
