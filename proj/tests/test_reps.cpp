#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/loops.hpp"
#include "bicol/reps.hpp"
#include "helpers.hpp"

using namespace bicol;
using namespace testing;

TEST_CASE("unicoloured classification") {
  auto a1 = classifyUnicoloured(builtin("A", 1));
  REQUIRE(a1.size() == 2);
  CHECK(a1[1].l == rv({q(1, 2)}));
  CHECK(builtin("A", 1).norm(a1[1].l) == q(1, 2));
  CHECK(a1[1].m == 4);
  auto e8 = classifyUnicoloured(builtin("E8"));
  REQUIRE(e8.size() == 1);
  CHECK(isZero(e8[0].l));
  CHECK(e8[0].m == 1);
  CHECK(classifyUnicoloured(builtin("A", 2)).size() == 3);
  for (std::string name : {"A4", "D4", "D5", "E6", "E7"})
    CHECK(Int(static_cast<long>(classifyUnicoloured(builtinByName(name)).size())) == builtinByName(name).disc());
  CHECK(errorOf([] { classifyUnicoloured(builtin("Z", 2)); }) == Errc::NotEven);
  CHECK(errorOf([] { classifyUnicoloured(builtin("U")); }) == Errc::NotPositiveDefinite);
}

TEST_CASE("bicoloured classification") {
  CHECK(classifyBicoloured(builtinSpan("rank1-72")).size() == 12);
  CHECK(classifyBicoloured(builtinSpan("d8pair")).size() == 1);
  for (std::string name : {"A1", "A2", "D4"})
    CHECK(classifyBicoloured(builtinSpan("identity:" + name)).size() == classifyUnicoloured(builtinByName(name)).size());
  LatticeSpan r = builtinSpan("rank1-72");
  auto labels = classifyBicoloured(r);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) CHECK(isomorphicLabels(r, labels[i], labels[j]) == (i == j));
}

TEST_CASE("rotation cover") {
  RatMatrix g = toRat(im({{2}}));
  CHECK(rotationCover(g, rv({0})) == 1);
  CHECK(rotationCover(g, rv({q(1, 2)})) == 4);
  CHECK(rotationCover(g, rv({q(1, 2)}), 6) == 8);
  CHECK(rotationCover(g, rv({0}), 6) == 6);
}

TEST_CASE("label equivalence") {
  Lattice a1 = builtin("A", 1);
  UnicolouredLabel h = makeLabel(a1, rv({q(1, 2)})), h3 = makeLabel(a1, rv({q(3, 2)})), z = makeLabel(a1, rv({0}));
  CHECK(isomorphicLabels(a1, h, h));
  CHECK(isomorphicLabels(a1, h, h3));
  CHECK(!isomorphicLabels(a1, h, z));
  UnicolouredLabel moved = conjugateShift(a1, z, rv({1}));
  CHECK(a1.norm(moved.l) == 2);
  CHECK(isomorphicLabels(a1, moved, z));
  CHECK(isomorphicLabels(a1, conjugateShift(a1, h, rv({0})), h));
  CHECK(errorOf([&] { makeLabel(a1, rv({q(1, 3)})); }) == Errc::NotInLattice);

  // A bicoloured span with a nontrivial character group: two colours glued through D4.
  LatticeSpan s = builtinSpan("identity:A2");
  BicolouredLabel x = makeLabel(s, {}, rv({q(1, 3), q(2, 3)}));
  BicolouredLabel y = makeLabel(s, {}, rv({q(4, 3), q(-1, 3)}));
  CHECK(isomorphicLabels(s, x, y));
  CHECK(!isomorphicLabels(s, x, makeLabel(s, {}, rv({0, 0}))));
}

TEST_CASE("restriction decomposition") {
  Lattice e8 = builtin("E8");
  auto terms = restrictionDecomposition(e8, makeLabel(e8, RatVec(8)), 1, 1);
  CHECK(terms.size() == 241);
  FracSeries sum = sumHeads(terms, 8, 1);
  CHECK(sum.coefficientAt(q(-1, 3)) == 1);
  CHECK(sum.coefficientAt(q(2, 3)) == 248);

  Lattice a1 = builtin("A", 1);
  auto one = restrictionDecomposition(a1, makeLabel(a1, rv({q(1, 2)})), q(1, 4), 2);
  REQUIRE(one.size() == 2);
  for (const auto& t : one) CHECK(t.energy == q(1, 4));
  CHECK(one[0].lambda != one[1].lambda);
  CHECK(restrictionDecomposition(a1, makeLabel(a1, rv({q(1, 2)})), q(1, 5), 2).empty());

  for (std::string name : {"A1", "A2", "D4"}) {
    Lattice l = builtinByName(name);
    for (const auto& lb : classifyUnicoloured(l)) {
      FracSeries sum = sumHeads(restrictionDecomposition(l, lb, 3, 3), static_cast<int>(l.rank()), 3);
      FracSeries chi = characterUnicoloured(l, lb.l, 3);
      Rat limit = 3 - makeRat(static_cast<long>(l.rank()), 24);
      for (std::size_t k = 0; k < chi.coeffs().size() && chi.exponent(k) <= limit; ++k)
        CHECK(sum.coefficientAt(chi.exponent(k)) == chi.coeffs()[k]);
    }
  }
}

TEST_CASE("identity component witness across modules") {
  // The loop-group commutator against γ_λ is the phase that conjugation by γ_λ adds.
  LoopGroup a2(builtin("A", 2));
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    IntVec lambda = rng.intVec(2, -2, 2);
    RatVec x0 = rng.rationalVec(2, -1, 1, 6);
    PLPath rho = randomPath(rng, x0, x0);
    Angle phase = a2.commutator(rho, PLPath::linear(RatVec(2), toRat(lambda))).viaCocycle;
    CHECK(phase == Angle(-a2.lattice().pair(toRat(lambda), rho.integral())));
  }
}
