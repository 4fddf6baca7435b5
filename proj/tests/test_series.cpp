#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/series.hpp"
#include "helpers.hpp"

using namespace bicol;
using namespace testing;

namespace {

// Coefficients of a series on the grid 1/den, starting at exponent 0.
using Grid = std::vector<Int>;

Grid convolve(const Grid& a, const Grid& b, std::size_t len) {
  Grid c(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// One-dimensional theta of offset + Z with weight q^{x²/2}, on the grid 1/8.
Grid theta1(bool half, std::size_t len) {
  Grid g(len, 0);
  for (int n = -20; n <= 20; ++n) {
    int twice = 2 * n + (half ? 1 : 0); // 2x
    std::size_t e = static_cast<std::size_t>(twice * twice); // x²/2 = twice²/8
    if (e < len) g[e] += 1;
  }
  return g;
}

Grid power(const Grid& g, int k, std::size_t len) {
  Grid r(len, 0);
  r[0] = 1;
  for (int i = 0; i < k; ++i) r = convolve(r, g, len);
  return r;
}

// Partition counts for 8 colours placed on the 1/8 grid.
Grid etaGrid(int d, std::size_t len) {
  auto p = colouredPartitions(d, static_cast<int>(len / 8) + 1);
  Grid g(len, 0);
  for (std::size_t k = 0; 8 * k < len; ++k) g[8 * k] = p[k];
  return g;
}

} // namespace

TEST_CASE("eta powers against listed coloured partitions") {
  for (int d = 1; d <= 4; ++d) {
    CAPTURE(d);
    CHECK(etaInversePower(d, 10).coeffs() == colouredPartitions(d, 10));
  }
  CHECK(etaInversePower(1, 5).coeffs() == std::vector<Int>{1, 1, 2, 3, 5, 7});
  CHECK(etaInversePower(8, 2).coeffs() == std::vector<Int>{1, 8, 44});
  CHECK(etaInversePower(0, 4).coeffs() == std::vector<Int>{1, 0, 0, 0, 0});
}

TEST_CASE("theta series") {
  Lattice a1 = builtin("A", 1);
  FracSeries t = thetaSeries(wholeLattice(a1), rv({0}), 9);
  for (int e = 0; e <= 9; ++e) {
    CAPTURE(e);
    long want = e == 0 ? 1 : (e == 1 || e == 4 || e == 9) ? 2 : 0;
    CHECK(t.coefficientAt(e) == want);
  }
  FracSeries h = thetaSeries(wholeLattice(a1), rv({q(1, 2)}), q(9, 4));
  CHECK(h.coefficientAt(q(1, 4)) == 2);
  CHECK(h.coefficientAt(q(5, 4)) == 0);
  CHECK(h.coefficientAt(q(9, 4)) == 2);
  CHECK(thetaSeries(wholeLattice(builtin("E8")), RatVec(8), 1).coefficientAt(1) == 240);
}

TEST_CASE("E8 vacuum character") {
  FracSeries c = characterUnicoloured(builtin("E8"), RatVec(8), 2);
  CHECK(c.coefficientAt(q(-1, 3)) == 1);
  CHECK(c.coefficientAt(q(2, 3)) == 248);
  CHECK(c.coefficientAt(q(5, 3)) == 4124);

  // Oracle: E8 = D8 ∪ (D8 + s) in coordinates; D8 is the even-sum half of Z^8.
  const std::size_t len = 8 * 2 + 1;
  Grid whole = power(theta1(false, len), 8, len), half = power(theta1(true, len), 8, len);
  // Even-sum part of Z^8: (θ_Z^8 + θ_Z(−q)^8)/2, where the sign flips odd squares.
  Grid alt(len, 0);
  for (int n = -20; n <= 20; ++n) {
    std::size_t e = static_cast<std::size_t>(4 * n * n);
    if (e < len) alt[e] += (n % 2 == 0) ? 1 : -1;
  }
  Grid signedPow = power(alt, 8, len);
  Grid theta(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    Int evenPart = (whole[i] + signedPow[i]) / 2;
    Int halfEven = half[i] / 2; // half of the (Z+1/2)^8 vectors have even coordinate sum
    theta[i] = evenPart + halfEven;
  }
  Grid oracle = convolve(theta, etaGrid(8, len), len);
  CHECK(oracle[0] == 1);
  CHECK(oracle[8] == 248);
  CHECK(oracle[16] == 4124);
}

TEST_CASE("small characters") {
  FracSeries a1 = characterUnicoloured(builtin("A", 1), rv({0}), 1);
  CHECK(a1.coefficientAt(q(-1, 24)) == 1);
  CHECK(a1.coefficientAt(q(23, 24)) == 3);

  FracSeries r = characterBicoloured(builtinSpan("rank1-72"), rv({0}), 1);
  CHECK(r.coefficientAt(q(-1, 24)) == 1);
  CHECK(r.coefficientAt(q(23, 24)) == 3);

  for (std::string name : {"A1", "A2", "D4"}) {
    CAPTURE(name);
    Lattice l = builtinByName(name);
    CHECK(characterBicoloured(builtinSpan("identity:" + name), RatVec(l.rank()), 3) ==
          characterUnicoloured(l, RatVec(l.rank()), 3));
  }
}

TEST_CASE("d8pair character is the D8 dual theta over eta^8") {
  FracSeries c = characterBicoloured(builtinSpan("d8pair"), RatVec(8), 2);
  const std::size_t len = 8 * 2 + 1;
  // D8^∨ = Z^8 ∪ (Z + 1/2)^8 in coordinates.
  Grid theta = power(theta1(false, len), 8, len), half = power(theta1(true, len), 8, len);
  for (std::size_t i = 0; i < len; ++i) theta[i] += half[i];
  Grid oracle = convolve(theta, etaGrid(8, len), len);
  for (std::size_t i = 0; i < len; ++i) {
    CAPTURE(i);
    CHECK(c.coefficientAt(makeRat(static_cast<long>(i), 8) - q(1, 3)) == oracle[i]);
  }
}

TEST_CASE("characters depend only on the coset") {
  Lattice a2 = builtin("A", 2);
  RatVec l = rv({q(1, 3), q(2, 3)});
  RatVec moved = add(l, rv({q(2), q(-1)}));
  CHECK(characterUnicoloured(a2, l, 3) == characterUnicoloured(a2, moved, 3));
  CHECK(errorOf([&] { characterUnicoloured(a2, rv({q(1, 2), 0}), 3); }) == Errc::NotInLattice);
  CHECK(errorOf([] { characterUnicoloured(builtin("Z", 1), rv({0}), 3); }) == Errc::NotEven);
}

TEST_CASE("series arithmetic") {
  FracSeries a(2, -1, {1, 0, 3});
  FracSeries b(3, 0, {1, 1});
  FracSeries prod = a * b;
  CHECK(prod.coefficientAt(q(-1, 2)) == 1);
  CHECK(prod.coefficientAt(q(-1, 6)) == 1);
  CHECK(a.shifted(q(1, 2)).coefficientAt(0) == 1);
  CHECK(a.regrid(4).coefficientAt(q(1, 2)) == 3);
  CHECK(a.canonical() == a);
}
