#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/fock.hpp"
#include "bicol/series.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace bicol;
using namespace testing;

namespace {

const double pi = std::acos(-1.0);

FourierLoop single(int k, Complex c) { return FourierLoop(1, {{k, CVec{c}}}); }

// Number of monomials in d variables of given energy, listed directly:
// a monomial is a multiset of (mode k ≥ 1, colour) pairs.
long listMonomials(int energy, int maxMode, int maxColour, int d) {
  if (energy == 0) return 1;
  long n = 0;
  for (int k = std::min(energy, maxMode); k >= 1; --k)
    for (int c = (k == maxMode ? maxColour : d - 1); c >= 0; --c) n += listMonomials(energy - k, k, c, d);
  return n;
}

} // namespace

TEST_CASE("symplectic form and complex structure") {
  Gram g = identityGram(1);
  FourierLoop xi = single(1, 1.0);
  CHECK(fourierS(xi, FourierLoop(1), g) == 0.0);
  CHECK(fourierS(xi, applyJ(xi), g) == doctest::Approx(2 * pi));
  CHECK(applyJ(applyJ(xi)).positiveModes() == (-xi).positiveModes());
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    FourierLoop a = randomFourierLoop(rng, 2, 5, 1.0, identityGram(2));
    FourierLoop b = randomFourierLoop(rng, 2, 5, 1.0, identityGram(2));
    CHECK(std::abs(fourierS(a, b, identityGram(2)) + fourierS(b, a, identityGram(2))) < 1e-12);
    Complex self = innerJ(a, a, identityGram(2));
    CHECK(self.real() > 0);
    CHECK(std::abs(self.imag()) < 1e-12);
    double t = rng.unit();
    FourierLoop d = applyJ(a.rotated(t)) - applyJ(a).rotated(t);
    CHECK(std::abs(innerJ(d, d, identityGram(2))) < 1e-20);
  }
  CHECK_THROWS(FourierLoop::fromModes(1, {{0, CVec{1.0}}}));
}

TEST_CASE("Fock inner products") {
  CHECK(fockInner(FockVector::vacuum(2, 4), FockVector::vacuum(2, 4)) == Complex(1));
  CVec e1{1, 0}, e2{0, 1};
  std::vector<FockVector> deg2{FockVector::product({e1, e1}, 2), FockVector::product({e1, e2}, 2),
                               FockVector::product({e2, e2}, 2)};
  const double want[3] = {2, 1, 2};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(std::abs(fockInner(deg2[a], deg2[b]) - (a == b ? want[a] : 0.0)) < 1e-15);

  CVec x{Complex(0.3, 0.1), Complex(-0.2, 0.5)}, y{Complex(0.7, -0.4), Complex(0.1, 0.2)};
  Complex xy = x[0] * std::conj(y[0]) + x[1] * std::conj(y[1]);
  Complex sq = fockInner(FockVector::product({x, x}, 2), FockVector::product({y, y}, 2));
  CHECK(std::abs(sq - 2.0 * xy * xy) < 1e-14);
  CHECK(std::abs(symmetricPairing({x, x}, {y, y}) - 2.0 * xy * xy) < 1e-14);
  CHECK(std::abs(symmetricPairing({x, y, x}, {y, x, y}) -
                 fockInner(FockVector::product({x, y, x}, 3), FockVector::product({y, x, y}, 3))) < 1e-14);
  CHECK_THROWS_AS(fockInner(FockVector::vacuum(1, 3), FockVector::vacuum(1, 4)), Error);
}

TEST_CASE("coherent vectors") {
  CVec zero{0.0};
  CHECK(std::abs(coherentInner(zero, zero, 20) - 1.0) < 1e-15);
  // ⟨ξ,η⟩ = 2 in one dimension.
  CVec a{std::sqrt(2.0)}, b{std::sqrt(2.0)};
  CHECK(std::abs(coherentInner(a, b, 20) - std::exp(2.0)) < 1e-8);
  // e^0, e^ξ, e^{2ξ} are linearly independent: their Gram determinant is nonzero.
  CVec xi{0.5}, xi2{1.0};
  std::vector<CVec> v{zero, xi, xi2};
  Complex m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = coherentInner(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)], 20);
  Complex det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  CHECK(std::abs(det) > 1e-6);
}

TEST_CASE("Weyl operators and the Heisenberg group") {
  CoherentSum vac{{{1.0, CVec{0.0, 0.0}}}};
  CoherentSum same = weylApply(CVec{0.0, 0.0}, 1.0, vac);
  CHECK(std::abs(same.terms[0].first - 1.0) < 1e-15);

  Gram g = identityGram(1);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    FourierLoop xi = randomFourierLoop(rng, 1, 4, 1.0, g), eta = randomFourierLoop(rng, 1, 4, 1.0, g);
    Frame f({xi, eta}, g);
    CVec cx = f.coords(xi), ce = f.coords(eta);
    FockVector w = weylApply(cx, 1.0, {{{1.0, CVec(f.size())}}}).toFock(f.size(), 20);
    CHECK(std::abs(fockInner(w, w) - 1.0) < 1e-8);

    HeisenbergElement inv = heisenbergMultiply({xi, 1.0}, {-xi, 1.0}, g);
    CHECK(inv.xi.isZero());
    CHECK(std::abs(inv.z - 1.0) < 1e-12);
    HeisenbergElement ab = heisenbergMultiply({xi, 1.0}, {eta, 1.0}, g);
    HeisenbergElement ba = heisenbergMultiply({eta, 1.0}, {xi, 1.0}, g);
    CHECK(std::abs(ab.z / ba.z - std::polar(1.0, -4 * pi * fourierS(xi, eta, g))) < 1e-12);

    // W(ξ)W(η) = W(ξ+η, e^{−2πiS(ξ,η)}) on the vacuum.
    CoherentSum lhs = weylApply(cx, 1.0, weylApply(ce, 1.0, {{{1.0, CVec(f.size())}}}));
    CoherentSum rhs = weylApply(f.coords(ab.xi), ab.z, {{{1.0, CVec(f.size())}}});
    CHECK(std::abs(lhs.terms[0].first - rhs.terms[0].first) < 1e-8);
  }
}

TEST_CASE("energy dimensions") {
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 10; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      std::vector<Int> dims = energyDims(d, k);
      CHECK(dims == etaInversePower(d, k).coeffs());
      CHECK(dims.back() == listMonomials(k, k, d - 1, d));
    }
  CHECK(energyDims(1, 5) == std::vector<Int>{1, 1, 2, 3, 5, 7});
  CHECK(energyDims(2, 2).back() == 5);
  CHECK(energyDims(4, 0) == std::vector<Int>{1});
}
