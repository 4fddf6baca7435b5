#include "bicol/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

namespace bicol {

const char* definitenessName(Definiteness d) {
  switch (d) {
  case Definiteness::Positive: return "positive";
  case Definiteness::Negative: return "negative";
  case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

IntMatrix leading(const IntMatrix& m, std::size_t k) {
  IntMatrix s(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s(i, j) = m(i, j);
  return s;
}

// Integer-scaled copy of a rational matrix plus the scale.
std::pair<IntMatrix, Int> clearDenominators(const RatMatrix& m) {
  Int d = 1;
  for (const Rat& x : m.data()) d = lcm(d, x.get_den());
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat t = m(i, j) * Rat(d);
      r(i, j) = t.get_num();
    }
  return {r, d};
}

} // namespace

Lattice makeLattice(const IntMatrix& gram, std::optional<std::string> name) {
  if (gram.rows() != gram.cols() || !isSymmetric(gram)) fail(Errc::NotSymmetric, "Gram matrix is not symmetric");
  Lattice l;
  l.name_ = std::move(name);
  l.gram_ = gram;
  l.gramQ_ = toRat(gram);
  l.det_ = det(gram);
  if (l.det_ == 0) fail(Errc::Degenerate, "Gram matrix is singular");
  std::size_t n = gram.rows();
  l.even_ = true;
  for (std::size_t i = 0; i < n; ++i)
    if (gram(i, i) % 2 != 0) l.even_ = false;
  bool pos = true, negd = true;
  for (std::size_t k = 1; k <= n; ++k) {
    int s = sgn(det(leading(gram, k)));
    if (s <= 0) pos = false;
    if (s != (k % 2 == 1 ? -1 : 1)) negd = false;
  }
  l.def_ = pos ? Definiteness::Positive : (negd ? Definiteness::Negative : Definiteness::Indefinite);
  return l;
}

// ---------------------------------------------------------------------------

RationalSublattice::RationalSublattice(RatMatrix ambientGram, const RatMatrix& generators)
    : ambientGram_(std::move(ambientGram)) {
  std::size_t n = ambientGram_.rows();
  if (generators.rows() != n) fail(Errc::InvalidArgument, "generator dimension mismatch");
  auto [scaled, d] = clearDenominators(generators.transpose());
  HermiteResult h = hermiteNormalForm(scaled);
  if (h.rank != n) fail(Errc::Degenerate, "generators do not span a full-rank lattice");
  basis_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis_(j, i) = makeRat(h.H(i, j), d);
  basisInv_ = inverse(basis_);
}

bool RationalSublattice::contains(const RationalSublattice& other) const {
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basisVector(j))) return false;
  return true;
}

RatMatrix RationalSublattice::gramInBasis() const { return basis_.transpose() * ambientGram_ * basis_; }

RatVec RationalSublattice::reduce(const RatVec& v) const {
  RatVec c = coords(v);
  for (Rat& x : c) x = fracPart(x);
  return fromCoords(c);
}

RationalSublattice wholeLattice(const Lattice& l) {
  return RationalSublattice(l.gramQ(), RatMatrix::identity(l.rank()));
}

RationalSublattice dualLattice(const Lattice& l) { return RationalSublattice(l.gramQ(), inverse(l.gramQ())); }

RationalSublattice dualOf(const RationalSublattice& s) {
  // X with X^T A B = I.
  RatMatrix x = inverse(s.ambientGram()) * inverse(s.basis()).transpose();
  return RationalSublattice(s.ambientGram(), x);
}

RationalSublattice latticeSum(const RationalSublattice& a, const RationalSublattice& b) {
  if (a.ambientGram() != b.ambientGram()) fail(Errc::Mismatch, "sublattices live in different ambient spaces");
  std::size_t n = a.ambientRank();
  RatMatrix g(n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    g.setCol(j, a.basisVector(j));
    g.setCol(n + j, b.basisVector(j));
  }
  return RationalSublattice(a.ambientGram(), g);
}

RationalSublattice latticeIntersection(const RationalSublattice& a, const RationalSublattice& b) {
  return dualOf(latticeSum(dualOf(a), dualOf(b)));
}

// ---------------------------------------------------------------------------

std::vector<VectorWithNorm> enumerateCoset(const RatMatrix& gram, const RatVec& translate, const Rat& maxNorm) {
  std::size_t n = gram.rows();
  if (translate.size() != n) fail(Errc::InvalidArgument, "translate dimension mismatch");
  // G = L D L^T with L unit lower triangular.
  RatMatrix lo = RatMatrix::identity(n);
  RatVec dg(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = gram(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= lo(j, k) * lo(j, k) * dg[k];
    if (s <= 0) fail(Errc::NotPositiveDefinite, "form is not positive definite");
    dg[j] = s;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat t = gram(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= lo(i, k) * lo(j, k) * dg[k];
      lo(i, j) = t / s;
    }
  }
  std::vector<VectorWithNorm> out;
  if (maxNorm < 0) return out;
  RatVec y(n);
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t level, Rat remaining) {
    std::size_t i = level - 1;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= lo(j, i) * y[j];
    Rat z = c - translate[i];
    Rat s2 = remaining / dg[i];
    auto ok = [&](const Int& x) {
      Rat d = Rat(x) - z;
      return d * d <= s2;
    };
    Int m = floorOf(z);
    Int seed;
    if (ok(m)) seed = m;
    else if (ok(m + 1)) seed = m + 1;
    else return;
    double sa = std::sqrt(std::max(0.0, s2.get_d())) + 1.0;
    Int lo_ = ceilOf(z - Rat(sa)), hi = floorOf(z + Rat(sa));
    if (lo_ > seed) lo_ = seed;
    if (hi < seed) hi = seed;
    while (ok(lo_ - 1)) --lo_;
    while (!ok(lo_)) ++lo_;
    while (ok(hi + 1)) ++hi;
    while (!ok(hi)) --hi;
    for (Int x = lo_; x <= hi; ++x) {
      y[i] = Rat(x) + translate[i];
      Rat d = y[i] - c;
      Rat rest = remaining - dg[i] * d * d;
      if (i == 0) {
        out.push_back({y, maxNorm - rest});
      } else {
        rec(i, rest);
      }
    }
  };
  if (n == 0) {
    out.push_back({{}, 0});
    return out;
  }
  rec(n, maxNorm);
  // Norm from the recursion equals maxNorm - rest only up to exact algebra;
  // recompute directly to keep the output self-evidently correct.
  for (auto& v : out) v.norm = form(gram, v.coords, v.coords);
  std::sort(out.begin(), out.end(), [](const VectorWithNorm& a, const VectorWithNorm& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  });
  return out;
}

std::vector<VectorWithNorm> shortVectors(const Lattice& l, const Rat& maxNorm) {
  if (!l.positiveDefinite()) fail(Errc::NotPositiveDefinite, "short vectors need a positive definite lattice");
  auto all = enumerateCoset(l.gramQ(), RatVec(l.rank()), maxNorm);
  std::vector<VectorWithNorm> out;
  for (auto& v : all)
    if (v.norm > 0) out.push_back(std::move(v));
  return out;
}

Lattice directSum(const Lattice& a, const Lattice& b) {
  std::size_t n = a.rank(), m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  std::optional<std::string> name;
  if (a.name() && b.name()) name = *a.name() + "+" + *b.name();
  else if (m == 0) name = a.name();
  else if (n == 0) name = b.name();
  return makeLattice(g, name);
}

// ---------------------------------------------------------------------------

namespace {

CatalogLattice fromEuclidean(const RatMatrix& basis, const std::string& name) {
  RatMatrix g = basis.transpose() * basis;
  return {makeLattice(toInt(g), name), basis};
}

RatMatrix anBasis(int n) {
  RatMatrix b(n + 1, n);
  for (int i = 0; i < n; ++i) {
    b(i + 1, i) = 1;
    b(i, i) = -1;
  }
  return b;
}

RatMatrix dnBasis(int n) {
  RatMatrix b(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    b(i + 1, i) = 1;
    b(i, i) = -1;
  }
  b(0, n - 1) = 1;
  b(1, n - 1) = 1;
  return b;
}

// Hermite-normalized basis (columns) of the lattice spanned by the columns.
RatMatrix rebase(const RatMatrix& gens) {
  std::size_t n = gens.rows();
  Int d = 1;
  for (const Rat& x : gens.data()) d = lcm(d, x.get_den());
  IntMatrix rows(gens.cols(), n);
  for (std::size_t j = 0; j < gens.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Rat t = gens(i, j) * Rat(d);
      rows(j, i) = t.get_num();
    }
  HermiteResult h = hermiteNormalForm(rows);
  RatMatrix b(n, h.rank);
  for (std::size_t k = 0; k < h.rank; ++k)
    for (std::size_t i = 0; i < n; ++i) b(i, k) = makeRat(h.H(k, i), d);
  return b;
}

RatMatrix e8Basis() {
  RatMatrix gens(8, 9);
  RatMatrix d8 = dnBasis(8);
  for (std::size_t j = 0; j < 8; ++j) gens.setCol(j, d8.col(j));
  for (std::size_t i = 0; i < 8; ++i) gens(i, 8) = Rat(1, 2);
  return rebase(gens);
}

// Sublattice of E8 orthogonal to the given Euclidean vectors.
RatMatrix e8Complement(const std::vector<RatVec>& roots) {
  RatMatrix b = e8Basis();
  IntMatrix constraints(roots.size(), 8);
  for (std::size_t r = 0; r < roots.size(); ++r)
    for (std::size_t j = 0; j < 8; ++j) constraints(r, j) = toInt(RatVec{dot(roots[r], b.col(j))})[0];
  IntMatrix ker = integerKernel(constraints);
  RatMatrix k = toRat(ker).transpose();
  return b * k;
}

} // namespace

CatalogLattice builtinModel(const std::string& name, std::optional<int> n) {
  auto needRank = [&](int minimum) {
    if (!n) fail(Errc::BadRank, name + " requires a rank");
    if (*n < minimum) fail(Errc::BadRank, name + " requires rank >= " + std::to_string(minimum));
  };
  if (name == "A") {
    needRank(1);
    return fromEuclidean(anBasis(*n), "A" + std::to_string(*n));
  }
  if (name == "D") {
    needRank(3);
    return fromEuclidean(dnBasis(*n), "D" + std::to_string(*n));
  }
  if (name == "Z") {
    needRank(1);
    return fromEuclidean(RatMatrix::identity(*n), "Z" + std::to_string(*n));
  }
  if (name == "E8" || name == "E7" || name == "E6" || name == "U") {
    if (n) fail(Errc::BadRank, name + " takes no rank parameter");
  }
  if (name == "E8") return fromEuclidean(e8Basis(), "E8");
  if (name == "E7") return fromEuclidean(e8Complement({{1, -1, 0, 0, 0, 0, 0, 0}}), "E7");
  if (name == "E6")
    return fromEuclidean(e8Complement({{1, -1, 0, 0, 0, 0, 0, 0}, {0, 1, -1, 0, 0, 0, 0, 0}}), "E6");
  if (name == "U") {
    IntMatrix g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return {makeLattice(g, "U"), std::nullopt};
  }
  fail(Errc::UnknownName, "unknown lattice '" + name + "'");
}

Lattice builtin(const std::string& name, std::optional<int> n) { return builtinModel(name, n).lattice; }

CatalogLattice builtinModelByName(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '_') s += c;
  if (s == "E6" || s == "E7" || s == "E8" || s == "U") return builtinModel(s);
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D' || s[0] == 'Z') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (s.size() > 4) fail(Errc::BadRank, "rank too large in '" + text + "'");
    return builtinModel(std::string(1, s[0]), std::stoi(s.substr(1)));
  }
  if (s == "A" || s == "D" || s == "Z") fail(Errc::BadRank, s + " requires a rank");
  fail(Errc::UnknownName, "unknown lattice '" + text + "'");
}

Lattice builtinByName(const std::string& text) { return builtinModelByName(text).lattice; }

} // namespace bicol
