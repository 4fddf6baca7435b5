#include "bicol/span.hpp"

namespace bicol {

namespace {

std::pair<IntMatrix, IntVec> scaledSystem(const RatMatrix& a, const RatVec& b) {
  Int d = 1;
  for (const Rat& x : a.data()) d = lcm(d, x.get_den());
  for (const Rat& x : b) d = lcm(d, x.get_den());
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rat t = a(i, j) * Rat(d);
      m(i, j) = t.get_num();
    }
  IntVec r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rat t = b[i] * Rat(d);
    r[i] = t.get_num();
  }
  return {m, r};
}

void requireInSum(const SpanDerived& d, const RatVec& v) {
  if (v.size() != d.sum.ambientRank()) fail(Errc::InvalidArgument, "vector has wrong dimension");
  if (!d.sum.contains(v)) fail(Errc::NotInSumLattice, "vector is not in the sum lattice");
}

} // namespace

RatMatrix standardEpsilon(const Lattice& l) {
  std::size_t n = l.rank();
  RatMatrix e(n, n);
  const IntMatrix& g = l.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Int t = g(i, j) + g(i, i) * g(j, j);
      e(i, j) = makeRat(t, 2);
    }
  return e;
}

RatMatrix restrictEpsilon(const RatMatrix& epsilon, const RatMatrix& basis) {
  return basis.transpose() * epsilon * basis;
}

LatticeSpan makeSpan(const Lattice& gamma, const Lattice& white, const Lattice& black, const IntMatrix& embedW,
                     const IntMatrix& embedB, std::optional<std::string> name) {
  std::size_t n = gamma.rank();
  if (white.rank() != n || black.rank() != n) fail(Errc::RankMismatch, "span lattices must share the same rank");
  if (embedW.rows() != n || embedW.cols() != n || embedB.rows() != n || embedB.cols() != n)
    fail(Errc::RankMismatch, "embeddings must be square of the common rank");
  if (!gamma.even() || !white.even() || !black.even()) fail(Errc::NotEven, "span lattices must be even");
  if (embedW.transpose() * white.gram() * embedW != gamma.gram())
    fail(Errc::NotIsometry, "white embedding does not preserve the form");
  if (embedB.transpose() * black.gram() * embedB != gamma.gram())
    fail(Errc::NotIsometry, "black embedding does not preserve the form");

  LatticeSpan s;
  s.name_ = std::move(name);
  s.gamma_ = gamma;
  s.white_ = white;
  s.black_ = black;
  s.embedW_ = embedW;
  s.embedB_ = embedB;

  auto d = std::make_shared<SpanDerived>();
  const RatMatrix& g = gamma.gramQ();
  d->gamma = wholeLattice(gamma);
  d->embedWInv = inverse(toRat(embedW));
  d->embedBInv = inverse(toRat(embedB));
  d->preW = RationalSublattice(g, d->embedWInv);
  d->preB = RationalSublattice(g, d->embedBInv);
  d->intersection = latticeIntersection(d->preW, d->preB);
  d->sum = latticeSum(d->preW, d->preB);
  d->dualGamma = dualLattice(gamma);
  d->level = finiteQuotient(d->sum, d->gamma).exponent();
  d->intersectionModGamma = finiteQuotient(d->intersection, d->gamma);
  d->dualModSum = finiteQuotient(d->dualGamma, d->sum);

  IntMatrix rows(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rows(i, j) = embedW(j, i);
      rows(i, n + j) = embedB(j, i);
    }
  d->classKey = hermiteNormalForm(rows).H;
  s.derived_ = d;

  // ε needs b, which needs the derived sublattices above.
  const RatMatrix& f = d->sum.basis();
  RatMatrix et(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) et(i, j) = commutatorB(s, f.col(i), f.col(j)).value();
  RatMatrix fi = inverse(f);
  d->epsilon = fi.transpose() * et * fi;
  return s;
}

SumDecomposition decomposeSum(const LatticeSpan& s, const RatVec& lambda) {
  const SpanDerived& d = s.derived();
  requireInSum(d, lambda);
  std::size_t n = s.rank();
  RatMatrix a(n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    a.setCol(j, d.preW.basisVector(j));
    a.setCol(n + j, neg(d.preB.basisVector(j)));
  }
  auto [m, r] = scaledSystem(a, lambda);
  auto sol = solveDiophantine(m, r);
  if (!sol) fail(Errc::NotInSumLattice, "no decomposition found");
  RatVec cw(sol->begin(), sol->begin() + n), cb(sol->begin() + n, sol->end());
  RatVec w = d.preW.fromCoords(RatVec(cw.begin(), cw.end()));
  RatVec b = d.preB.fromCoords(RatVec(cb.begin(), cb.end()));
  return {w, b};
}

Angle commutatorBWith(const LatticeSpan& s, const RatVec& lambda, const RatVec& lambdaBlack, const RatVec& mu) {
  const SpanDerived& d = s.derived();
  requireInSum(d, lambda);
  requireInSum(d, mu);
  if (!d.preB.contains(lambdaBlack) || !d.preW.contains(add(lambda, lambdaBlack)))
    fail(Errc::NotInSumLattice, "invalid decomposition of the first argument");
  const RatMatrix& g = s.gamma().gramQ();
  Rat v = form(g, mu, lambda) / 2 + form(g, mu, lambdaBlack);
  return Angle(v);
}

Angle commutatorB(const LatticeSpan& s, const RatVec& lambda, const RatVec& mu) {
  SumDecomposition dec = decomposeSum(s, lambda);
  return commutatorBWith(s, lambda, dec.black, mu);
}

Angle epsilonCocycle(const LatticeSpan& s, const RatVec& lambda, const RatVec& mu) {
  const SpanDerived& d = s.derived();
  requireInSum(d, lambda);
  requireInSum(d, mu);
  return epsilonAngle(d.epsilon, lambda, mu);
}

ClassPair canonicalClass(const LatticeSpan& s, const ClassPair& c) {
  std::size_t n = s.rank();
  if (c.white.size() != n || c.black.size() != n) fail(Errc::InvalidArgument, "class pair has wrong dimension");
  const IntMatrix& key = s.derived().classKey;
  IntVec v(c.white);
  v.insert(v.end(), c.black.begin(), c.black.end());
  std::size_t col = 0;
  for (std::size_t k = 0; k < key.rows(); ++k) {
    while (col < 2 * n && key(k, col) == 0) ++col;
    if (col == 2 * n) break;
    Int q = floorDiv(v[col], key(k, col));
    for (std::size_t j = 0; j < 2 * n; ++j) v[j] -= q * key(k, j);
  }
  return {IntVec(v.begin(), v.begin() + n), IntVec(v.begin() + n, v.end())};
}

bool sameClass(const LatticeSpan& s, const ClassPair& a, const ClassPair& b) {
  return canonicalClass(s, a) == canonicalClass(s, b);
}

RatVec classToSum(const LatticeSpan& s, const ClassPair& c) {
  const SpanDerived& d = s.derived();
  return sub(d.embedWInv * toRat(c.white), d.embedBInv * toRat(c.black));
}

// ---------------------------------------------------------------------------

namespace {

LatticeSpan identitySpan(const Lattice& l, const std::string& name) {
  IntMatrix id = IntMatrix::identity(l.rank());
  return makeSpan(l, l, l, id, id, name);
}

// Overlattice of the Euclidean lattice with basis `base`, spanned by it and `extra`.
std::pair<Lattice, IntMatrix> euclideanOverlattice(const RatMatrix& base, const RatVec& extra, const std::string& name) {
  std::size_t n = base.rows();
  RatMatrix gens(n, base.cols() + 1);
  for (std::size_t j = 0; j < base.cols(); ++j) gens.setCol(j, base.col(j));
  gens.setCol(base.cols(), extra);
  RationalSublattice over(RatMatrix::identity(n), gens);
  const RatMatrix& b = over.basis();
  Lattice l = makeLattice(toInt(b.transpose() * b), name);
  IntMatrix embed = toInt(inverse(b) * base);
  return {l, embed};
}

} // namespace

LatticeSpan builtinSpan(const std::string& name) {
  const std::string prefix = "identity:";
  if (name.rfind(prefix, 0) == 0) return identitySpan(builtinByName(name.substr(prefix.size())), name);
  if (name == "rank1-72") {
    IntMatrix g(1, 1), w(1, 1), b(1, 1), ew(1, 1), eb(1, 1);
    g(0, 0) = 72;
    w(0, 0) = 18;
    b(0, 0) = 8;
    ew(0, 0) = 2;
    eb(0, 0) = 3;
    return makeSpan(makeLattice(g), makeLattice(w), makeLattice(b), ew, eb, name);
  }
  if (name == "d8pair") {
    CatalogLattice d8 = builtinModel("D", 8);
    const RatMatrix& base = *d8.euclidean;
    RatVec l1(8, Rat(1, 2)), l2(8);
    l2[0] = 1;
    auto [white, ew] = euclideanOverlattice(base, l1, "D8+l1");
    auto [black, eb] = euclideanOverlattice(base, add(l1, l2), "D8+l1+l2");
    return makeSpan(d8.lattice, white, black, ew, eb, name);
  }
  fail(Errc::UnknownName, "unknown span '" + name + "'");
}

} // namespace bicol
