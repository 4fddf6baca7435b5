#include "bicol/path.hpp"

#include <algorithm>

namespace bicol {

IntervalSet mergeIntervals(IntervalSet s) {
  std::sort(s.begin(), s.end());
  IntervalSet out;
  for (auto& iv : s) {
    if (!out.empty() && iv.first <= out.back().second) {
      if (iv.second > out.back().second) out.back().second = iv.second;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

bool circleContains(const IntervalSet& s, const Rat& t) {
  Rat x = fracPart(t);
  for (const auto& iv : s) {
    if (iv.first <= x && x <= iv.second) return true;
    if (x == 0 && iv.second == 1) return true;
  }
  return false;
}

bool circleIntersects(const IntervalSet& a, const IntervalSet& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (std::max(x.first, y.first) <= std::min(x.second, y.second)) return true;
  return (circleContains(a, 0) && circleContains(b, 0));
}

// ---------------------------------------------------------------------------

namespace {

std::size_t pieceOf(const RatVec& t, const Rat& x) {
  auto it = std::upper_bound(t.begin(), t.end(), x);
  std::size_t i = static_cast<std::size_t>(it - t.begin());
  if (i == 0) return 0;
  if (i >= t.size()) return t.size() - 2;
  return i - 1;
}

void checkBreakpoints(const RatVec& t) {
  if (t.size() < 2 || t.front() != 0 || t.back() != 1)
    fail(Errc::InvalidArgument, "breakpoints must run from 0 to 1");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i - 1] < t[i])) fail(Errc::InvalidArgument, "breakpoints must be strictly increasing");
}

} // namespace

PLPath::PLPath(RatVec breakpoints, std::vector<RatVec> values) : t_(std::move(breakpoints)), values_(std::move(values)) {
  checkBreakpoints(t_);
  if (values_.size() != t_.size()) fail(Errc::InvalidArgument, "need one value per breakpoint");
  for (const RatVec& v : values_)
    if (v.size() != values_[0].size()) fail(Errc::InvalidArgument, "path values have mixed dimensions");
}

PLPath PLPath::constant(const RatVec& v) { return PLPath({0, 1}, {v, v}); }

PLPath PLPath::linear(const RatVec& a, const RatVec& b) { return PLPath({0, 1}, {a, b}); }

RatVec PLPath::at(const Rat& x) const {
  if (x < 0 || x > 1) fail(Errc::InvalidArgument, "path parameter outside [0,1]");
  std::size_t i = pieceOf(t_, x);
  if (x == t_[i]) return values_[i];
  if (x == t_[i + 1]) return values_[i + 1];
  Rat s = (x - t_[i]) / (t_[i + 1] - t_[i]);
  const RatVec &a = values_[i], &b = values_[i + 1];
  RatVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) {
      out[k] = a[k];
      continue;
    }
    Rat step = b[k] - a[k];
    out[k] = a[k] + s * step;
  }
  return out;
}

std::vector<RatVec> PLPath::sampleSorted(const RatVec& xs) const {
  std::vector<RatVec> out;
  out.reserve(xs.size());
  std::size_t i = 0;
  Rat s;
  for (const Rat& x : xs) {
    if (x < 0 || x > 1) fail(Errc::InvalidArgument, "path parameter outside [0,1]");
    while (i + 1 < t_.size() && t_[i + 1] <= x) ++i;
    if (x == t_[i]) {
      out.push_back(values_[i]);
      continue;
    }
    s = (x - t_[i]) / (t_[i + 1] - t_[i]);
    const RatVec &a = values_[i], &b = values_[i + 1];
    RatVec v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == b[k]) {
        v[k] = a[k];
        continue;
      }
      mpq_sub(v[k].get_mpq_t(), b[k].get_mpq_t(), a[k].get_mpq_t());
      v[k] *= s;
      v[k] += a[k];
    }
    out.push_back(std::move(v));
  }
  return out;
}

RatVec PLPath::extended(const Rat& x) const {
  Int k = floorOf(x);
  Rat y = x - Rat(k);
  return add(at(y), scale(Rat(k), delta()));
}

RatVec PLPath::integral() const {
  RatVec s(dim());
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    Rat w = (t_[i + 1] - t_[i]) / 2;
    s = add(s, scale(w, add(values_[i], values_[i + 1])));
  }
  return s;
}

RatVec mergeBreakpoints(const RatVec& a, const RatVec& b) {
  RatVec m;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

PLPath PLPath::refinedTo(const RatVec& breakpoints) const {
  RatVec t = mergeBreakpoints(t_, breakpoints);
  std::vector<RatVec> v;
  v.reserve(t.size());
  for (const Rat& x : t) v.push_back(at(x));
  return PLPath(t, v);
}

PLPath PLPath::withBreakpoint(const Rat& t) const { return refinedTo({t}); }

PLPath PLPath::simplified() const {
  RatVec t{t_[0]};
  std::vector<RatVec> v{values_[0]};
  Rat l, r;
  for (std::size_t i = 1; i + 1 < t_.size(); ++i) {
    Rat h1 = t_[i] - t.back(), h2 = t_[i + 1] - t_[i];
    bool straight = true;
    for (std::size_t k = 0; k < dim() && straight; ++k) {
      l = values_[i][k] - v.back()[k];
      l *= h2;
      r = values_[i + 1][k] - values_[i][k];
      r *= h1;
      straight = l == r;
    }
    if (straight) continue;
    t.push_back(t_[i]);
    v.push_back(values_[i]);
  }
  t.push_back(t_.back());
  v.push_back(values_.back());
  return PLPath(std::move(t), std::move(v));
}

PLPath PLPath::mapped(const RatMatrix& m) const {
  std::vector<RatVec> v;
  for (const RatVec& x : values_) v.push_back(m * x);
  return PLPath(t_, v);
}

PLPath PLPath::shifted(const RatVec& c) const {
  std::vector<RatVec> v;
  for (const RatVec& x : values_) v.push_back(add(x, c));
  return PLPath(t_, v);
}

PLPath PLPath::scaled(const Rat& s) const {
  std::vector<RatVec> v;
  for (const RatVec& x : values_) v.push_back(scale(s, x));
  return PLPath(t_, v);
}

PLPath operator+(const PLPath& a, const PLPath& b) {
  if (a.dim() != b.dim()) fail(Errc::Mismatch, "paths of different dimension");
  RatVec t = mergeBreakpoints(a.t_, b.t_);
  std::vector<RatVec> v = a.sampleSorted(t), w = b.sampleSorted(t);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < v[i].size(); ++k) v[i][k] += w[i][k];
  return PLPath(std::move(t), std::move(v));
}

PLPath operator-(const PLPath& a, const PLPath& b) { return a + (-b); }

bool operator==(const PLPath& a, const PLPath& b) {
  PLPath x = a.simplified(), y = b.simplified();
  return x.t_ == y.t_ && x.values_ == y.values_;
}

// Trapezoid sums over a common denominator keep the inner loop in integers.
Rat integralDerivPair(const RatMatrix& g, const PLPath& xi, const PLPath& eta, const Rat& a, const Rat& b) {
  RatVec all = mergeBreakpoints(mergeBreakpoints(xi.breakpoints(), eta.breakpoints()), {a, b}), inside;
  for (const Rat& x : all)
    if (a <= x && x <= b) inside.push_back(x);
  std::vector<RatVec> xs = xi.sampleSorted(inside), es = eta.sampleSorted(inside);
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
  Int dx = commonDenominator(xs), de = commonDenominator(es), dg = commonDenominator(rows);
  std::vector<IntVec> gi;
  for (const RatVec& r : rows) gi.push_back(scaledToInt(r, dg));
  Int s = 0, row, dj, sum;
  IntVec xa = scaledToInt(xs[0], dx), ea = scaledToInt(es[0], de);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    IntVec xb = scaledToInt(xs[i], dx), eb = scaledToInt(es[i], de);
    for (std::size_t j = 0; j < xb.size(); ++j) {
      mpz_sub(dj.get_mpz_t(), xb[j].get_mpz_t(), xa[j].get_mpz_t());
      if (sgn(dj) == 0) continue;
      row = 0;
      for (std::size_t k = 0; k < eb.size(); ++k) {
        if (sgn(gi[j][k]) == 0) continue;
        mpz_add(sum.get_mpz_t(), ea[k].get_mpz_t(), eb[k].get_mpz_t());
        mpz_addmul(row.get_mpz_t(), gi[j][k].get_mpz_t(), sum.get_mpz_t());
      }
      mpz_addmul(s.get_mpz_t(), dj.get_mpz_t(), row.get_mpz_t());
    }
    xa = std::move(xb);
    ea = std::move(eb);
  }
  Int den = 2 * dx * de * dg;
  return makeRat(s, den);
}

// ---------------------------------------------------------------------------

PLReparam::PLReparam(RatVec breakpoints, RatVec values, long period)
    : t_(std::move(breakpoints)), v_(std::move(values)), period_(period) {
  checkBreakpoints(t_);
  if (v_.size() != t_.size()) fail(Errc::InvalidArgument, "need one value per breakpoint");
  if (period_ < 1) fail(Errc::InvalidArgument, "period must be positive");
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (!(v_[i - 1] < v_[i])) fail(Errc::InvalidArgument, "reparametrization must be strictly increasing");
  if (v_.back() != v_.front() + 1) fail(Errc::InvalidArgument, "reparametrization must satisfy Φ(1) = Φ(0) + 1");
  RatVec t{t_[0]}, v{v_[0]};
  for (std::size_t i = 1; i + 1 < t_.size(); ++i) {
    Rat s1 = (v_[i] - v.back()) / (t_[i] - t.back());
    Rat s2 = (v_[i + 1] - v_[i]) / (t_[i + 1] - t_[i]);
    if (s1 == s2) continue;
    t.push_back(t_[i]);
    v.push_back(v_[i]);
  }
  t.push_back(t_.back());
  v.push_back(v_.back());
  t_ = std::move(t);
  v_ = std::move(v);
}

PLReparam PLReparam::identity(long period) { return PLReparam({0, 1}, {0, 1}, period); }

PLReparam PLReparam::rotation(const Rat& theta, long period) {
  return PLReparam({0, 1}, {theta, theta + 1}, period);
}

Rat PLReparam::operator()(const Rat& x) const {
  Int k = floorOf(x);
  Rat y = x - Rat(k);
  std::size_t i = pieceOf(t_, y);
  Rat s = (y - t_[i]) / (t_[i + 1] - t_[i]);
  return v_[i] + s * (v_[i + 1] - v_[i]) + Rat(k);
}

Rat PLReparam::inverse(const Rat& y) const {
  Int k = floorOf(y - v_.front());
  Rat z = y - Rat(k);
  std::size_t i = pieceOf(v_, z);
  Rat s = (z - v_[i]) / (v_[i + 1] - v_[i]);
  return t_[i] + s * (t_[i + 1] - t_[i]) + Rat(k);
}

IntervalSet PLReparam::support() const {
  IntervalSet s;
  for (std::size_t i = 0; i + 1 < t_.size(); ++i)
    if (v_[i] != t_[i] || v_[i + 1] != t_[i + 1]) s.push_back({t_[i], t_[i + 1]});
  return mergeIntervals(s);
}

bool PLReparam::operator==(const PLReparam& o) const {
  // Φ and Φ + period represent the same element.
  if (period_ != o.period_ || t_ != o.t_) return false;
  Rat d = o.v_[0] - v_[0];
  if (!isInteger(d) || d.get_num() % period_ != 0) return false;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (o.v_[i] - v_[i] != d) return false;
  return true;
}

PLReparam compose(const PLReparam& psi, const PLReparam& phi) {
  if (psi.period_ != phi.period_) fail(Errc::PeriodMismatch, "composing reparametrizations of different periods");
  RatVec xs = phi.t_;
  Int k0 = floorOf(phi(0));
  for (Int k = k0 - 1; k <= k0 + 1; ++k)
    for (const Rat& s : psi.t_) {
      Rat x = phi.inverse(s + Rat(k));
      if (x > 0 && x < 1) xs.push_back(x);
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  RatVec vs;
  for (const Rat& x : xs) vs.push_back(psi(phi(x)));
  return PLReparam(xs, vs, phi.period_);
}

PLPath pushforward(const PLReparam& phi, const PLPath& xi) {
  RatVec th{0, 1};
  Int k0 = floorOf(phi.inverse(0));
  for (Int k = k0 - 1; k <= k0 + 1; ++k) {
    for (const Rat& s : phi.breakpoints()) {
      Rat y = phi(s + Rat(k));
      if (y > 0 && y < 1) th.push_back(y);
    }
    for (const Rat& s : xi.breakpoints()) {
      Rat y = phi(s + Rat(k));
      if (y > 0 && y < 1) th.push_back(y);
    }
  }
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  std::vector<RatVec> v;
  for (const Rat& y : th) v.push_back(xi.extended(phi.inverse(y)));
  return PLPath(th, v).simplified();
}

} // namespace bicol
