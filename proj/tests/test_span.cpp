#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/random.hpp"
#include "bicol/span.hpp"
#include "helpers.hpp"

using namespace bicol;
using namespace testing;

namespace {

LatticeSpan rank1(long w, long b) {
  return makeSpan(makeLattice(im({{72}})), makeLattice(im({{18}})), makeLattice(im({{8}})), im({{w}}), im({{b}}));
}

} // namespace

TEST_CASE("span validation") {
  CHECK_NOTHROW(builtinSpan("identity:A1"));
  CHECK_NOTHROW(rank1(2, 3));
  CHECK(errorOf([] { rank1(1, 3); }) == Errc::NotIsometry);
  CHECK(errorOf([] {
          makeSpan(builtin("A", 1), builtin("A", 2), builtin("A", 1), IntMatrix::identity(1), IntMatrix::identity(1));
        }) == Errc::RankMismatch);
  CHECK(errorOf([] {
          Lattice z = builtin("Z", 1);
          makeSpan(z, z, z, IntMatrix::identity(1), IntMatrix::identity(1));
        }) == Errc::NotEven);
  CHECK(errorOf([] { builtinSpan("nope"); }) == Errc::UnknownName);
}

TEST_CASE("derived lattices") {
  LatticeSpan ids = builtinSpan("identity:A2");
  const SpanDerived& id = ids.derived();
  CHECK(id.intersection == id.gamma);
  CHECK(id.sum == id.gamma);
  CHECK(id.level == 1);
  CHECK(id.intersectionModGamma.order() == 1);
  CHECK(id.dualModSum.invariantFactors() == std::vector<Int>{3});

  LatticeSpan rs = rank1(2, 3);
  const SpanDerived& r = rs.derived();
  CHECK(r.intersection == r.gamma);
  CHECK(r.sum.basis()(0, 0) == q(1, 6));
  CHECK(r.sum.gramInBasis()(0, 0) == 2);
  CHECK(r.level == 6);
  CHECK(r.dualModSum.invariantFactors() == std::vector<Int>{12});
  CHECK(r.intersectionModGamma.order() == 1);

  LatticeSpan d8 = builtinSpan("d8pair");
  const SpanDerived& d = d8.derived();
  CHECK(d.intersection == d.gamma);
  CHECK(d.sum == dualLattice(d8.gamma()));
  CHECK(d.level == 2);
  CHECK(d.intersectionModGamma.order() == 1);
  CHECK(d.dualModSum.order() == 1);
  CHECK(d8.white().disc() == 1);
  CHECK(d8.black().disc() == 1);
}

TEST_CASE("sum decomposition and commutator form") {
  LatticeSpan s = rank1(2, 3);
  RatVec lambda = rv({q(5, 6)});
  SumDecomposition dec = decomposeSum(s, lambda);
  CHECK(sub(dec.white, dec.black) == lambda);
  CHECK(s.derived().preW.contains(dec.white));
  CHECK(s.derived().preB.contains(dec.black));
  CHECK(errorOf([&] { decomposeSum(s, rv({q(1, 7)})); }) == Errc::NotInSumLattice);

  Rng rng(3);
  for (std::string name : {"identity:A2", "rank1-72", "d8pair"}) {
    CAPTURE(name);
    LatticeSpan sp = builtinSpan(name);
    const SpanDerived& d = sp.derived();
    for (int i = 0; i < 20; ++i) {
      RatVec a = d.sum.fromCoords(toRat(rng.intVec(sp.rank(), -3, 3)));
      RatVec b = d.sum.fromCoords(toRat(rng.intVec(sp.rank(), -3, 3)));
      CHECK(commutatorB(sp, a, a).isZero());
      CHECK(commutatorB(sp, a, b) == -commutatorB(sp, b, a));
      CHECK(epsilonCocycle(sp, a, b) - epsilonCocycle(sp, b, a) == commutatorB(sp, a, b));
    }
  }
}

TEST_CASE("identity span commutator is the parity of the pairing") {
  LatticeSpan s = builtinSpan("identity:D4");
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    RatVec a = toRat(rng.intVec(4, -3, 3)), b = toRat(rng.intVec(4, -3, 3));
    Angle c = commutatorB(s, a, b);
    CHECK(c == Angle(s.gamma().pair(a, b) / 2));
    CHECK((c.isZero() || c.value() == q(1, 2)));
  }
  CHECK(epsilonCocycle(s, rv({1, 0, 0, 0}), rv({1, 0, 0, 0})).isZero());
}

TEST_CASE("class pairs") {
  LatticeSpan s = rank1(2, 3);
  ClassPair c{iv({1}), iv({0})};
  CHECK(classToSum(s, c) == rv({q(1, 2)}));
  ClassPair shifted{iv({3}), iv({3})}; // Γ sits diagonally as (2, 3)
  CHECK(sameClass(s, c, shifted));
  CHECK(canonicalClass(s, c) == canonicalClass(s, shifted));
  CHECK(!sameClass(s, c, ClassPair{iv({0}), iv({0})}));
}

TEST_CASE("d8pair commutator on the glue vectors") {
  LatticeSpan s = builtinSpan("d8pair");
  RatMatrix toCoords = inverse(*builtinModelByName("D8").euclidean);
  RatVec l1 = toCoords * RatVec(8, q(1, 2)), l2 = toCoords * rv({1, 0, 0, 0, 0, 0, 0, 0});
  // l₂ is not in Λw, so its black part is nonzero and the order matters.
  CHECK(commutatorB(s, l1, l2) == Angle(q(1, 4)));
  CHECK(commutatorB(s, l2, l1) == Angle(q(3, 4)));
  CHECK(epsilonCocycle(s, l2, l1) - epsilonCocycle(s, l1, l2) == commutatorB(s, l2, l1));
}
