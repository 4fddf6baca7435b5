#include "bicol/series.hpp"

#include <algorithm>
#include <numeric>

namespace bicol {

namespace {

long toLongChecked(const Rat& r) {
  if (!isInteger(r)) fail(Errc::InvalidArgument, "exponent off the grid");
  return toLong(r.get_num());
}

long lcmLong(long a, long b) { return std::lcm(a, b); }

} // namespace

FracSeries::FracSeries(long denom, long start, std::vector<Int> coeffs)
    : denom_(denom), start_(start), coeffs_(std::move(coeffs)) {
  if (denom_ < 1) fail(Errc::InvalidArgument, "series denominator must be positive");
  if (coeffs_.empty()) fail(Errc::InvalidArgument, "series needs at least one coefficient");
}

Int FracSeries::coefficientAt(const Rat& e) const {
  Rat n = e * Rat(denom_);
  if (!isInteger(n)) return 0;
  long idx = toLong(n.get_num()) - start_;
  if (idx < 0) return 0;
  if (idx >= static_cast<long>(coeffs_.size())) fail(Errc::InvalidArgument, "exponent beyond series precision");
  return coeffs_[idx];
}

FracSeries FracSeries::regrid(long m) const {
  if (m % denom_ != 0) fail(Errc::InvalidArgument, "regrid target must be a multiple of the denominator");
  long f = m / denom_;
  std::vector<Int> c((coeffs_.size() - 1) * f + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * f] = coeffs_[k];
  return FracSeries(m, start_ * f, std::move(c));
}

FracSeries FracSeries::shifted(const Rat& e) const {
  long m = lcmLong(denom_, toLong(e.get_den()));
  FracSeries r = regrid(m);
  r.start_ += toLongChecked(e * Rat(m));
  return r;
}

FracSeries FracSeries::truncated(const Rat& maxExp) const {
  Int last = floorOf(maxExp * Rat(denom_));
  long keep = toLong(last) - start_ + 1;
  if (keep <= 0) return FracSeries(denom_, toLong(last), {Int(0)});
  keep = std::min<long>(keep, static_cast<long>(coeffs_.size()));
  return FracSeries(denom_, start_, std::vector<Int>(coeffs_.begin(), coeffs_.begin() + keep));
}

FracSeries FracSeries::canonical() const {
  std::size_t lead = 0;
  while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  long s = start_ + static_cast<long>(lead);
  std::vector<Int> c(coeffs_.begin() + lead, coeffs_.end());
  long g = std::gcd(denom_, s);
  g = std::gcd(g, static_cast<long>(c.size() - 1));
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) g = std::gcd(g, static_cast<long>(k));
  if (g <= 1) return FracSeries(denom_, s, std::move(c));
  std::vector<Int> r;
  for (std::size_t k = 0; k < c.size(); k += g) r.push_back(c[k]);
  return FracSeries(denom_ / g, s / g, std::move(r));
}

FracSeries operator*(const FracSeries& a, const FracSeries& b) {
  long m = lcmLong(a.denom_, b.denom_);
  FracSeries x = a.regrid(m), y = b.regrid(m);
  std::size_t len = std::min(x.coeffs_.size(), y.coeffs_.size());
  std::vector<Int> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return FracSeries(m, x.start_ + y.start_, std::move(c));
}

FracSeries operator+(const FracSeries& a, const FracSeries& b) {
  long m = lcmLong(a.denom_, b.denom_);
  FracSeries x = a.regrid(m), y = b.regrid(m);
  long s = std::min(x.start_, y.start_);
  long top = std::min(x.start_ + static_cast<long>(x.coeffs_.size()), y.start_ + static_cast<long>(y.coeffs_.size()));
  if (top <= s) fail(Errc::InvalidArgument, "series have no common known range");
  std::vector<Int> c(top - s);
  for (long e = s; e < top; ++e) {
    if (e >= x.start_) c[e - s] += x.coeffs_[e - x.start_];
    if (e >= y.start_) c[e - s] += y.coeffs_[e - y.start_];
  }
  return FracSeries(m, s, std::move(c));
}

// ---------------------------------------------------------------------------

FracSeries etaInversePower(int d, int order) {
  if (d < 0 || order < 0) fail(Errc::InvalidArgument, "eta power and order must be nonnegative");
  std::vector<Int> c(order + 1);
  c[0] = 1;
  for (int j = 1; j <= order; ++j)
    for (int rep = 0; rep < d; ++rep)
      for (int n = j; n <= order; ++n) c[n] += c[n - j];
  return FracSeries(1, 0, std::move(c));
}

FracSeries thetaSeries(const RationalSublattice& s, const RatVec& translate, const Rat& maxExp) {
  RatMatrix g = s.gramInBasis();
  RatVec t = s.coords(translate);
  std::size_t n = g.rows();
  // Every ⟨t+x, t+x⟩/2 with x integral lies on the grid (1/m)Z.
  Int m = Rat(form(g, t, t) / 2).get_den();
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    m = lcm(m, form(g, t, e).get_den());
    m = lcm(m, Rat(g(i, i) / 2).get_den());
    for (std::size_t j = i + 1; j < n; ++j) m = lcm(m, g(i, j).get_den());
  }
  long md = toLong(m);
  auto vecs = enumerateCoset(g, t, 2 * maxExp);
  long last = toLong(floorOf(maxExp * Rat(md)));
  if (vecs.empty()) return FracSeries(md, last, {Int(0)});
  long s0 = last;
  std::vector<long> idx;
  for (const auto& v : vecs) {
    long e = toLongChecked(v.norm / 2 * Rat(md));
    idx.push_back(e);
    s0 = std::min(s0, e);
  }
  std::vector<Int> c(last - s0 + 1);
  for (long e : idx) c[e - s0] += 1;
  return FracSeries(md, s0, std::move(c));
}

FracSeries cosetCharacter(const RationalSublattice& s, const RatVec& l, int order) {
  FracSeries theta = thetaSeries(s, l, Rat(order));
  FracSeries eta = etaInversePower(static_cast<int>(s.rank()), order);
  FracSeries z = (theta * eta).truncated(Rat(order));
  return z.shifted(makeRat(-static_cast<long>(s.rank()), 24)).canonical();
}

FracSeries characterUnicoloured(const Lattice& l, const RatVec& label, int order) {
  if (!l.even()) fail(Errc::NotEven, "characters need an even lattice");
  if (!l.positiveDefinite()) fail(Errc::NotPositiveDefinite, "characters need a positive definite lattice");
  if (!dualLattice(l).contains(label)) fail(Errc::NotInLattice, "label is not in the dual lattice");
  return cosetCharacter(wholeLattice(l), label, order);
}

FracSeries characterBicoloured(const LatticeSpan& span, const RatVec& label, int order) {
  for (const Lattice* l : {&span.gamma(), &span.white(), &span.black()})
    if (!l->positiveDefinite()) fail(Errc::NotPositiveDefinite, "characters need positive definite lattices");
  const SpanDerived& d = span.derived();
  if (!d.dualGamma.contains(label)) fail(Errc::NotInLattice, "label is not in the dual of the base lattice");
  return cosetCharacter(d.sum, label, order);
}

} // namespace bicol
