#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bicol/glue.hpp"
#include "helpers.hpp"

#include <algorithm>

using namespace bicol;
using namespace testing;

TEST_CASE("discriminant forms") {
  Lattice a1 = builtin("A", 1);
  auto d = discriminantGroup(a1);
  CHECK(discQ(a1, d, iv({1})) == q(1, 2));
  CHECK(discB(a1, d, iv({1}), iv({1})).value() == q(1, 2));
  CHECK(discQ(a1, d, iv({0})) == 0);
  CHECK(discB(a1, d, iv({0}), iv({1})).isZero());

  // D8: the vector class has q = 1, the two spinor classes q = 0.
  Lattice d8 = builtin("D", 8);
  auto g = discriminantGroup(d8);
  std::vector<Rat> qs;
  for (const IntVec& x : g.elements())
    if (!g.isZero(x)) qs.push_back(discQ(d8, g, x));
  std::sort(qs.begin(), qs.end());
  CHECK(qs == std::vector<Rat>{0, 0, 1});
  CHECK(errorOf([&] { discQ(builtin("Z", 1), discriminantGroup(builtin("Z", 1)), {}); }) == Errc::NotEven);
}

TEST_CASE("isotropic subgroups") {
  CHECK(isotropicSubgroups(builtin("A", 1), IsoKind::Q).size() == 1);
  CHECK(isotropicSubgroups(builtin("D", 4), IsoKind::Q).size() == 1);
  auto d8 = isotropicSubgroups(builtin("D", 8), IsoKind::Q);
  REQUIRE(d8.size() == 3);
  CHECK(d8[0].order() == 1);
  // D_n for n even: b-isotropic but not q-isotropic classes exist.
  CHECK(isotropicSubgroups(builtin("D", 8), IsoKind::B).size() > d8.size());
}

TEST_CASE("overlattices of D8") {
  Lattice d8 = builtin("D", 8);
  auto subs = isotropicSubgroups(d8, IsoKind::Q);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    Overlattice o = overlatticeFromIsotropic(d8, subs[i]);
    CHECK(o.even);
    CHECK(o.lattice.rank() == 8);
    CHECK(o.lattice.disc() == 1);
    CHECK(shortVectors(o.lattice, 2).size() == 240);
    CHECK(d8.disc() == o.lattice.disc() * subs[i].order() * subs[i].order());
  }
  Overlattice same = overlatticeFromIsotropic(d8, subs[0]);
  CHECK(same.lattice.gram() == d8.gram());
  CHECK(same.sublattice == wholeLattice(d8));
}

TEST_CASE("subgroup to overlattice round trip") {
  for (std::string name : {"D4", "D8", "A2+A2", "A1+A1+A1+A1", "A3"}) {
    CAPTURE(name);
    Lattice l = name == "A2+A2"         ? directSum(builtin("A", 2), builtin("A", 2))
                : name == "A1+A1+A1+A1" ? directSum(directSum(builtin("A", 1), builtin("A", 1)),
                                                   directSum(builtin("A", 1), builtin("A", 1)))
                                        : builtinByName(name);
    auto d = discriminantGroup(l);
    for (IsoKind kind : {IsoKind::B, IsoKind::Q}) {
      for (const DiscSubgroup& u : isotropicSubgroups(l, kind)) {
        Overlattice o = overlatticeFromIsotropic(l, u);
        CHECK(subgroupOf(d, o.sublattice) == u);
        CHECK(l.disc() == o.lattice.disc() * u.order() * u.order());
        CHECK(perpQuotientMatches(l, u));
        if (kind == IsoKind::Q) CHECK(o.even);
      }
    }
  }
}

TEST_CASE("non-isotropic glue is rejected") {
  Lattice a1 = builtin("A", 1);
  auto d = discriminantGroup(a1);
  DiscSubgroup u(d, {iv({1})});
  CHECK(errorOf([&] { overlatticeFromIsotropic(a1, u); }) == Errc::NotIsotropic);
}
