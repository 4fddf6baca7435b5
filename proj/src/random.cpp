#include "bicol/random.hpp"

#include <algorithm>
#include <limits>

namespace bicol {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  while (true) {
    std::uint64_t x = eng_();
    if (x < limit) return x % n;
  }
}

long Rng::range(long lo, long hi) {
  if (hi < lo) fail(Errc::InvalidArgument, "empty sampling range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

Rat Rng::rational(long lo, long hi, long maxDen) {
  long d = range(1, maxDen);
  long n = range(lo * d, hi * d);
  return makeRat(n, d);
}

RatVec Rng::rationalVec(std::size_t n, long lo, long hi, long maxDen) {
  RatVec v(n);
  for (auto& x : v) {
    x = rational(lo, hi, maxDen);
    x.canonicalize();
  }
  return v;
}

IntVec Rng::intVec(std::size_t n, long lo, long hi) {
  IntVec v(n);
  for (auto& x : v) x = range(lo, hi);
  return v;
}

RatVec Rng::sortedPoints(std::size_t count, const Rat& a, const Rat& b, long maxDen) {
  RatVec pts;
  std::size_t guard = 0;
  while (pts.size() < count) {
    if (++guard > 10000) fail(Errc::InvalidArgument, "cannot place that many points");
    long d = range(1, maxDen);
    Int lo = floorOf(a * Rat(d)) + 1, hi = ceilOf(b * Rat(d)) - 1;
    if (hi < lo) continue;
    long n = range(toLong(lo), toLong(hi));
    Rat x(n, d);
    x.canonicalize();
    if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

} // namespace bicol
