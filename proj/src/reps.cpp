#include "bicol/reps.hpp"

namespace bicol {

namespace {

void requireCharacterLattice(const Lattice& l) {
  if (!l.even()) fail(Errc::NotEven, "representations need even lattices");
  if (!l.positiveDefinite()) fail(Errc::NotPositiveDefinite, "representations need positive definite lattices");
}

void requireDim(std::size_t want, const RatVec& v) {
  if (v.size() != want) fail(Errc::Mismatch, "label has wrong dimension");
}

IntVec reduceChi(const LatticeSpan& s, const IntVec& chi) {
  const auto& f = s.derived().intersectionModGamma.invariantFactors();
  if (chi.size() != f.size()) fail(Errc::Mismatch, "character has wrong number of components");
  IntVec r(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) r[i] = chi[i] - f[i] * floorDiv(chi[i], f[i]);
  return r;
}

std::vector<RestrictionTerm> decompose(const RationalSublattice& lat, const RatVec& l, const Rat& maxNorm, int order) {
  std::vector<RestrictionTerm> out;
  if (maxNorm < 0) return out;
  RatMatrix g = lat.gramInBasis();
  RatVec t = lat.coords(l);
  std::size_t rank = lat.rank();
  FracSeries eta = etaInversePower(static_cast<int>(rank), order);
  for (const auto& v : enumerateCoset(g, t, 2 * maxNorm)) {
    RestrictionTerm term;
    term.shifted = lat.fromCoords(v.coords);
    term.lambda = sub(l, term.shifted);
    term.energy = v.norm / 2;
    term.head = eta.shifted(term.energy).truncated(Rat(order)).shifted(makeRat(-static_cast<long>(rank), 24));
    out.push_back(std::move(term));
  }
  return out;
}

} // namespace

long rotationCover(const RatMatrix& gram, const RatVec& l, long atLeast) {
  Rat n = form(gram, l, l);
  // m·n ∈ 2Z  ⇔  (n/2).den | m
  Rat h = n / 2;
  long base = toLong(Int(h.get_den()));
  long m = base;
  while (m < atLeast) m += base;
  return m;
}

UnicolouredLabel makeLabel(const Lattice& lat, const RatVec& l) {
  requireDim(lat.rank(), l);
  if (!dualLattice(lat).contains(l)) fail(Errc::NotInLattice, "label is not in the dual lattice");
  return {l, rotationCover(lat.gramQ(), l)};
}

BicolouredLabel makeLabel(const LatticeSpan& s, const IntVec& chi, const RatVec& l) {
  requireDim(s.rank(), l);
  if (!s.derived().dualGamma.contains(l)) fail(Errc::NotInLattice, "label is not in the dual of the base lattice");
  return {reduceChi(s, chi), l, rotationCover(s.gamma().gramQ(), l, toLong(s.derived().level))};
}

std::vector<UnicolouredLabel> classifyUnicoloured(const Lattice& l) {
  requireCharacterLattice(l);
  FiniteAbelianPresentation d = discriminantGroup(l);
  std::vector<UnicolouredLabel> out;
  for (const IntVec& x : d.elements()) out.push_back(makeLabel(l, d.lift(x)));
  return out;
}

std::vector<BicolouredLabel> classifyBicoloured(const LatticeSpan& s) {
  for (const Lattice* l : {&s.gamma(), &s.white(), &s.black()}) requireCharacterLattice(*l);
  const SpanDerived& d = s.derived();
  std::vector<BicolouredLabel> out;
  // The dual of a finite abelian group is non-canonically isomorphic to it;
  // characters are indexed by exponent vectors mod the same invariant factors.
  for (const IntVec& chi : d.intersectionModGamma.elements())
    for (const IntVec& x : d.dualModSum.elements()) out.push_back(makeLabel(s, chi, d.dualModSum.lift(x)));
  return out;
}

bool isomorphicLabels(const Lattice& lat, const UnicolouredLabel& a, const UnicolouredLabel& b) {
  requireDim(lat.rank(), a.l);
  requireDim(lat.rank(), b.l);
  return isIntegral(sub(a.l, b.l));
}

bool isomorphicLabels(const LatticeSpan& s, const BicolouredLabel& a, const BicolouredLabel& b) {
  requireDim(s.rank(), a.l);
  requireDim(s.rank(), b.l);
  return reduceChi(s, a.chi) == reduceChi(s, b.chi) && s.derived().sum.contains(sub(a.l, b.l));
}

UnicolouredLabel conjugateShift(const Lattice& lat, const UnicolouredLabel& a, const RatVec& lambda) {
  requireDim(lat.rank(), lambda);
  if (!isIntegral(lambda)) fail(Errc::NotInLattice, "shift is not a lattice vector");
  return makeLabel(lat, sub(a.l, lambda));
}

BicolouredLabel conjugateShift(const LatticeSpan& s, const BicolouredLabel& a, const RatVec& lambda) {
  requireDim(s.rank(), lambda);
  if (!s.derived().sum.contains(lambda)) fail(Errc::NotInLattice, "shift is not in the sum lattice");
  return makeLabel(s, a.chi, sub(a.l, lambda));
}

std::vector<RestrictionTerm> restrictionDecomposition(const Lattice& lat, const UnicolouredLabel& a,
                                                      const Rat& maxNorm, int order) {
  if (!lat.positiveDefinite()) fail(Errc::NotPositiveDefinite, "restriction needs a positive definite lattice");
  return decompose(wholeLattice(lat), a.l, maxNorm, order);
}

std::vector<RestrictionTerm> restrictionDecomposition(const LatticeSpan& s, const BicolouredLabel& a,
                                                      const Rat& maxNorm, int order) {
  if (!s.gamma().positiveDefinite()) fail(Errc::NotPositiveDefinite, "restriction needs a positive definite lattice");
  return decompose(s.derived().sum, a.l, maxNorm, order);
}

FracSeries sumHeads(const std::vector<RestrictionTerm>& terms, int rank, int order) {
  FracSeries zero = FracSeries(1, 0, std::vector<Int>(static_cast<std::size_t>(order) + 1, Int(0)))
                        .shifted(makeRat(-rank, 24));
  FracSeries s = zero;
  for (const auto& t : terms) s = s + t.head;
  return s;
}

} // namespace bicol
