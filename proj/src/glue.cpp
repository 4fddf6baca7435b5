#include "bicol/glue.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bicol {

FiniteAbelianPresentation::FiniteAbelianPresentation(const RationalSublattice& top, const RationalSublattice& bottom)
    : top_(top), bottom_(bottom) {
  if (top.ambientGram() != bottom.ambientGram()) fail(Errc::Mismatch, "quotient of lattices in different spaces");
  if (!top.contains(bottom)) fail(Errc::NotContained, "bottom lattice is not contained in top lattice");
  std::size_t n = top.rank();
  RatMatrix topInv = inverse(top.basis());
  IntMatrix m = toInt(topInv * bottom.basis());
  SmithResult s = smithNormalForm(m);
  RatMatrix uq = toRat(s.U);
  RatMatrix gens = top.basis() * inverse(uq);
  RatMatrix toGen = uq * topInv;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (s.D(i, i) != 1) keep.push_back(i);
  lifts_ = RatMatrix(n, keep.size());
  toGen_ = RatMatrix(keep.size(), n);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    std::size_t i = keep[k];
    factors_.push_back(s.D(i, i));
    for (std::size_t r = 0; r < n; ++r) {
      toGen_(k, r) = toGen(i, r);
    }
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    RatVec g = gens.col(keep[k]);
    lifts_.setCol(k, bottom_.reduce(g));
  }
}

Int FiniteAbelianPresentation::order() const {
  Int o = 1;
  for (const Int& d : factors_) o *= d;
  return o;
}

IntVec FiniteAbelianPresentation::reduce(const IntVec& x) const {
  if (x.size() != factors_.size()) fail(Errc::InvalidArgument, "element has wrong number of coordinates");
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r[i] = x[i] - floorDiv(x[i], factors_[i]) * factors_[i];
  }
  return r;
}

IntVec FiniteAbelianPresentation::coordinates(const RatVec& v) const {
  if (!top_.contains(v)) fail(Errc::NotContained, "vector is not in the top lattice");
  return reduce(toInt(toGen_ * v));
}

RatVec FiniteAbelianPresentation::lift(const IntVec& x) const {
  IntVec r = reduce(x);
  RatVec v(top_.ambientRank());
  for (std::size_t i = 0; i < r.size(); ++i) v = bicol::add(v, scale(Rat(r[i]), lifts_.col(i)));
  return bottom_.reduce(v);
}

std::vector<IntVec> FiniteAbelianPresentation::elements(const Int& bound) const {
  if (order() > bound) fail(Errc::TooLarge, "finite group of order " + order().get_str() + " exceeds bound");
  std::vector<IntVec> out;
  IntVec x(factors_.size());
  while (true) {
    out.push_back(x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      x[i] += 1;
      if (x[i] < factors_[i]) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (x.empty()) return out;
  }
}

IntVec FiniteAbelianPresentation::add(const IntVec& x, const IntVec& y) const {
  IntVec s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return reduce(s);
}

IntVec FiniteAbelianPresentation::negate(const IntVec& x) const {
  IntVec s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = -x[i];
  return reduce(s);
}

bool FiniteAbelianPresentation::isZero(const IntVec& x) const {
  IntVec r = reduce(x);
  return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

FiniteAbelianPresentation finiteQuotient(const RationalSublattice& top, const RationalSublattice& bottom) {
  return FiniteAbelianPresentation(top, bottom);
}

FiniteAbelianPresentation discriminantGroup(const Lattice& l) {
  return FiniteAbelianPresentation(dualLattice(l), wholeLattice(l));
}

// ---------------------------------------------------------------------------

Angle discB(const Lattice& l, const FiniteAbelianPresentation& d, const IntVec& x, const IntVec& y) {
  return Angle(l.pair(d.lift(x), d.lift(y)));
}

Rat discQ(const Lattice& l, const FiniteAbelianPresentation& d, const IntVec& x) {
  if (!l.even()) fail(Errc::NotEven, "quadratic form needs an even lattice");
  Rat v = l.norm(d.lift(x));
  Rat h = v / 2;
  return 2 * fracPart(h);
}

DiscForms evalDiscForm(const Lattice& l, const FiniteAbelianPresentation& d, const IntVec& x, const IntVec& y) {
  DiscForms f{discB(l, d, x, y), std::nullopt};
  if (d.reduce(x) == d.reduce(y) && l.even()) f.q = discQ(l, d, x);
  return f;
}

// ---------------------------------------------------------------------------

DiscSubgroup::DiscSubgroup(const FiniteAbelianPresentation& parent, std::vector<IntVec> generators) {
  std::size_t r = parent.ngens();
  IntMatrix rows(generators.size() + r, r);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    IntVec x = parent.reduce(generators[g]);
    for (std::size_t j = 0; j < r; ++j) rows(g, j) = x[j];
  }
  for (std::size_t j = 0; j < r; ++j) rows(generators.size() + j, j) = parent.invariantFactors()[j];
  HermiteResult h = hermiteNormalForm(rows);
  key_ = IntMatrix(r, r);
  Int det = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) key_(i, j) = h.H(i, j);
    det *= h.H(i, i);
  }
  order_ = parent.order() / det;
  for (std::size_t i = 0; i < r; ++i) {
    IntVec x = parent.reduce(key_.row(i));
    if (!parent.isZero(x)) gens_.push_back(x);
  }
}

bool DiscSubgroup::contains(const IntVec& x) const {
  if (key_.rows() == 0) return true;
  return solveDiophantine(key_.transpose(), x).has_value();
}

bool isIsotropic(const Lattice& l, const FiniteAbelianPresentation& d, const DiscSubgroup& u, IsoKind kind) {
  const auto& g = u.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (kind == IsoKind::Q ? discQ(l, d, g[i]) != 0 : !discB(l, d, g[i], g[i]).isZero()) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!discB(l, d, g[i], g[j]).isZero()) return false;
  }
  return true;
}

std::vector<DiscSubgroup> isotropicSubgroups(const Lattice& l, IsoKind kind, const Int& bound) {
  if (kind == IsoKind::Q && !l.even()) fail(Errc::NotEven, "q-isotropy needs an even lattice");
  FiniteAbelianPresentation d = discriminantGroup(l);
  std::vector<IntVec> elems = d.elements(bound);
  std::vector<IntVec> candidates;
  for (const IntVec& e : elems) {
    if (d.isZero(e)) continue;
    bool ok = kind == IsoKind::Q ? discQ(l, d, e) == 0 : discB(l, d, e, e).isZero();
    if (ok) candidates.push_back(e);
  }
  auto keyLess = [](const DiscSubgroup& a, const DiscSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.key().data().begin(), a.key().data().end(), b.key().data().begin(),
                                        b.key().data().end());
  };
  std::vector<DiscSubgroup> found{DiscSubgroup(d, {})};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    DiscSubgroup cur = found[queue.front()];
    queue.pop_front();
    for (const IntVec& e : candidates) {
      if (cur.contains(e)) continue;
      bool orth = true;
      for (const IntVec& g : cur.generators())
        if (!discB(l, d, e, g).isZero()) {
          orth = false;
          break;
        }
      if (!orth) continue;
      std::vector<IntVec> gens = cur.generators();
      gens.push_back(e);
      DiscSubgroup next(d, gens);
      if (std::find(found.begin(), found.end(), next) != found.end()) continue;
      found.push_back(next);
      queue.push_back(found.size() - 1);
    }
  }
  std::sort(found.begin(), found.end(), keyLess);
  return found;
}

Overlattice overlatticeFromIsotropic(const Lattice& l, const DiscSubgroup& u) {
  FiniteAbelianPresentation d = discriminantGroup(l);
  if (!isIsotropic(l, d, u, IsoKind::B)) fail(Errc::NotIsotropic, "subgroup is not b-isotropic");
  std::size_t n = l.rank();
  RatMatrix gens(n, n + u.generators().size());
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = 1;
  for (std::size_t k = 0; k < u.generators().size(); ++k) gens.setCol(n + k, d.lift(u.generators()[k]));
  RationalSublattice s(l.gramQ(), gens);
  IntMatrix g = toInt(s.gramInBasis());
  std::optional<std::string> name;
  if (l.name()) name = *l.name() + "+U";
  Lattice m = makeLattice(g, name);
  return {m, s, m.even()};
}

DiscSubgroup subgroupOf(const FiniteAbelianPresentation& d, const RationalSublattice& m) {
  if (!m.contains(d.bottom())) fail(Errc::NotContained, "lattice does not contain the base lattice");
  std::vector<IntVec> gens;
  for (std::size_t j = 0; j < m.rank(); ++j) gens.push_back(d.coordinates(m.basisVector(j)));
  return DiscSubgroup(d, gens);
}

bool perpQuotientMatches(const Lattice& l, const DiscSubgroup& u) {
  FiniteAbelianPresentation d = discriminantGroup(l);
  Overlattice over = overlatticeFromIsotropic(l, u);
  RationalSublattice overDual = dualOf(over.sublattice);
  FiniteAbelianPresentation du = finiteQuotient(overDual, over.sublattice);
  std::vector<IntVec> perp;
  for (const IntVec& x : d.elements()) {
    bool ok = true;
    for (const IntVec& g : u.generators())
      if (!discB(l, d, x, g).isZero()) ok = false;
    if (ok) perp.push_back(x);
  }
  // |U^⊥| = |U| |D_U|
  if (Int(perp.size()) != u.order() * du.order()) return false;
  std::map<IntVec, std::size_t> images;
  for (const IntVec& x : perp) {
    RatVec v = d.lift(x);
    if (!overDual.contains(v)) return false;
    IntVec img = du.coordinates(v);
    if (du.isZero(img) != u.contains(x)) return false;
    images[img]++;
  }
  if (Int(images.size()) != du.order()) return false;
  // Forms recomputed in the overlattice's own basis and Gram.
  RatMatrix gu = toRat(over.lattice.gram());
  for (std::size_t i = 0; i < perp.size(); ++i)
    for (std::size_t j = i; j < perp.size(); ++j) {
      RatVec a = over.sublattice.coords(d.lift(perp[i]));
      RatVec b = over.sublattice.coords(d.lift(perp[j]));
      RatVec a2 = over.sublattice.coords(du.lift(du.coordinates(d.lift(perp[i]))));
      RatVec b2 = over.sublattice.coords(du.lift(du.coordinates(d.lift(perp[j]))));
      if (Angle(form(gu, a, b)) != Angle(form(gu, a2, b2))) return false;
      if (i == j && over.even) {
        Rat q1 = form(gu, a, a) / 2, q2 = form(gu, a2, a2) / 2;
        if (fracPart(q1) != fracPart(q2)) return false;
      }
    }
  return true;
}

} // namespace bicol
