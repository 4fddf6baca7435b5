#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/glue.hpp"
#include "helpers.hpp"

#include <functional>

using namespace bicol;
using namespace testing;

namespace {

// Vectors of squared length 2 in a coordinate model, listed by brute force.
long countRootsInteger(int dim, const std::function<bool(const std::vector<int>&)>& keep) {
  long count = 0;
  std::vector<int> x(static_cast<std::size_t>(dim), -1);
  while (true) {
    int n = 0;
    for (int c : x) n += c * c;
    if (n == 2 && keep(x)) ++count;
    std::size_t i = 0;
    while (i < x.size() && x[i] == 1) x[i++] = -1;
    if (i == x.size()) break;
    ++x[i];
  }
  return count;
}

long e8RootsByCoordinates() {
  long integral = countRootsInteger(8, [](const std::vector<int>& x) {
    int s = 0;
    for (int c : x) s += c;
    return s % 2 == 0;
  });
  // (±1/2)^8 with an even number of minus signs
  long half = 0;
  for (int mask = 0; mask < 256; ++mask)
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0) ++half;
  return integral + half;
}

RatMatrix gramFromEuclidean(const RatMatrix& b) {
  RatMatrix g(b.cols(), b.cols());
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) g(i, j) = dot(b.col(i), b.col(j));
  return g;
}

} // namespace

TEST_CASE("lattice validation") {
  Lattice a1 = makeLattice(im({{2}}));
  CHECK(a1.even());
  CHECK(a1.positiveDefinite());
  Lattice u = makeLattice(im({{0, 1}, {1, 0}}));
  CHECK(u.even());
  CHECK(u.definiteness() == Definiteness::Indefinite);
  Lattice z2 = makeLattice(im({{1, 0}, {0, 1}}));
  CHECK(!z2.even());
  CHECK(z2.positiveDefinite());
  CHECK(errorOf([] { makeLattice(im({{2, 1}, {0, 2}})); }) == Errc::NotSymmetric);
  CHECK(errorOf([] { makeLattice(im({{1, 1}, {1, 1}})); }) == Errc::Degenerate);
}

TEST_CASE("dual lattices") {
  RationalSublattice d = dualLattice(makeLattice(im({{2}})));
  CHECK(d.basis()(0, 0) == q(1, 2));
  CHECK(d.ambientGram()(0, 0) == 2);
  CHECK(d.ambientGram()(0, 0) * d.basis()(0, 0) * d.basis()(0, 0) == q(1, 2));
  Lattice e8 = builtin("E8");
  CHECK(dualLattice(e8) == wholeLattice(e8));
  Lattice z3 = builtin("Z", 3);
  CHECK(dualLattice(z3) == wholeLattice(z3));
}

TEST_CASE("catalog discriminants") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(builtin("A", n).disc() == n + 1);
    CHECK(discriminantGroup(builtin("A", n)).invariantFactors() == std::vector<Int>{Int(n + 1)});
  }
  CHECK(discriminantGroup(builtin("D", 4)).invariantFactors() == std::vector<Int>{2, 2});
  CHECK(discriminantGroup(builtin("D", 5)).invariantFactors() == std::vector<Int>{4});
  CHECK(builtin("D", 8).disc() == 4);
  CHECK(builtin("E6").disc() == 3);
  CHECK(builtin("E7").disc() == 2);
  CHECK(builtin("E8").disc() == 1);
  CHECK(builtin("E8").rank() == 8);
  CHECK(discriminantGroup(builtin("E8")).invariantFactors().empty());
  CHECK(builtin("A", 2).gram() == im({{2, -1}, {-1, 2}}));
  CHECK(builtin("U").gram() == im({{0, 1}, {1, 0}}));
  CHECK(errorOf([] { builtinByName("F4"); }) == Errc::UnknownName);
  CHECK(errorOf([] { builtin("D", 2); }) == Errc::BadRank);
}

TEST_CASE("catalog Gram matrices match their coordinate models") {
  for (std::string name : {"A3", "A8", "D4", "D8", "E6", "E7", "E8"}) {
    CAPTURE(name);
    CatalogLattice c = builtinModelByName(name);
    REQUIRE(c.euclidean);
    CHECK(gramFromEuclidean(*c.euclidean) == c.lattice.gramQ());
  }
}

TEST_CASE("root counts against brute-force coordinates") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    long oracle = countRootsInteger(n + 1, [](const std::vector<int>& x) {
      int s = 0;
      for (int c : x) s += c;
      return s == 0;
    });
    CHECK(oracle == n * (n + 1));
    CHECK(static_cast<long>(shortVectors(builtin("A", n), 2).size()) == oracle);
  }
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    long oracle = countRootsInteger(n, [](const std::vector<int>&) { return true; });
    CHECK(oracle == 2 * n * (n - 1));
    CHECK(static_cast<long>(shortVectors(builtin("D", n), 2).size()) == oracle);
  }
  long e8 = e8RootsByCoordinates();
  CHECK(e8 == 240);
  CHECK(shortVectors(builtin("E8"), 2).size() == 240);
  CHECK(shortVectors(builtin("A", 1), 2).size() == 2);
  CHECK(errorOf([] { shortVectors(builtin("U"), 2); }) == Errc::NotPositiveDefinite);
}

TEST_CASE("direct sums") {
  Lattice s = directSum(builtin("A", 1), builtin("A", 1));
  CHECK(s.gram() == im({{2, 0}, {0, 2}}));
  CHECK(s.disc() == 4);
}

TEST_CASE("coset enumeration") {
  auto v = enumerateCoset(toRat(im({{2}})), rv({q(1, 2)}), q(9, 2));
  REQUIRE(v.size() == 4);
  for (const auto& x : v) CHECK(x.norm == 2 * x.coords[0] * x.coords[0]);
}

TEST_CASE("sum and intersection of rational sublattices") {
  RatMatrix g = toRat(im({{72}}));
  RationalSublattice a(g, RatMatrix::fromRows({{q(1, 2)}})), b(g, RatMatrix::fromRows({{q(1, 3)}}));
  CHECK(latticeSum(a, b).basis()(0, 0) == q(1, 6));
  CHECK(latticeIntersection(a, b).basis()(0, 0) == 1);
}
