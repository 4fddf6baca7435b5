#pragma once

#include "bicol/foundation.hpp"

#include <cstdint>
#include <random>

namespace bicol {

// Seeded generator with platform-independent sampling (no std distributions).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n);
  long range(long lo, long hi); // inclusive
  bool coin() { return below(2) == 1; }
  double unit(); // [0,1)
  // Rational in [lo, hi] with denominator at most maxDen.
  Rat rational(long lo, long hi, long maxDen);
  RatVec rationalVec(std::size_t n, long lo, long hi, long maxDen);
  IntVec intVec(std::size_t n, long lo, long hi);
  // Strictly increasing rationals in the open interval (a, b).
  RatVec sortedPoints(std::size_t count, const Rat& a, const Rat& b, long maxDen);

private:
  std::mt19937_64 eng_;
};

} // namespace bicol
