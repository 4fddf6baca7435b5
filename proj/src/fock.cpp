#include "bicol/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bicol {

namespace {

constexpr double pi = std::numbers::pi;

// ξᵀ G conj(η)
Complex sesq(const CVec& x, const CVec& y, const Gram& g) {
  Complex s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * std::conj(y[j]);
  return s;
}

void requireDim(const FourierLoop& a, const FourierLoop& b, const Gram& g) {
  if (a.dim() != b.dim() || g.size() != a.dim()) fail(Errc::Mismatch, "Fourier loop dimensions differ");
}

} // namespace

FourierLoop::FourierLoop(std::size_t dim, std::map<int, CVec> positive) : dim_(dim), modes_(std::move(positive)) {
  for (const auto& [k, v] : modes_) {
    if (k <= 0) fail(Errc::InvalidArgument, "stored modes must be positive");
    if (v.size() != dim_) fail(Errc::InvalidArgument, "mode has wrong dimension");
  }
}

FourierLoop FourierLoop::fromModes(std::size_t dim, const std::map<int, CVec>& modes) {
  std::map<int, CVec> pos;
  for (const auto& [k, v] : modes) {
    if (k == 0) fail(Errc::InvalidArgument, "loops in V have no zero mode");
    auto it = modes.find(-k);
    if (it == modes.end()) fail(Errc::InvalidArgument, "missing conjugate mode " + std::to_string(-k));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v[i] - std::conj(it->second.at(i))) > 1e-12)
        fail(Errc::InvalidArgument, "modes are not conjugation symmetric");
    if (k > 0) pos[k] = v;
  }
  return FourierLoop(dim, pos);
}

CVec FourierLoop::mode(int k) const {
  auto it = modes_.find(k < 0 ? -k : k);
  if (k == 0 || it == modes_.end()) return CVec(dim_);
  if (k > 0) return it->second;
  CVec c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = std::conj(it->second[i]);
  return c;
}

bool FourierLoop::isZero() const {
  for (const auto& [k, v] : modes_)
    for (const Complex& c : v)
      if (c != Complex(0)) return false;
  return true;
}

FourierLoop FourierLoop::operator+(const FourierLoop& o) const {
  if (dim_ != o.dim_) fail(Errc::Mismatch, "Fourier loop dimensions differ");
  std::map<int, CVec> m = modes_;
  for (const auto& [k, v] : o.modes_) {
    CVec& t = m.try_emplace(k, CVec(dim_)).first->second;
    for (std::size_t i = 0; i < dim_; ++i) t[i] += v[i];
  }
  return FourierLoop(dim_, m);
}

FourierLoop FourierLoop::scaled(double s) const { return complexScaled(Complex(s, 0)); }

FourierLoop FourierLoop::complexScaled(Complex c) const {
  std::map<int, CVec> m = modes_;
  for (auto& [k, v] : m)
    for (Complex& x : v) x *= c;
  return FourierLoop(dim_, m);
}

FourierLoop FourierLoop::rotated(double t) const {
  std::map<int, CVec> m = modes_;
  for (auto& [k, v] : m) {
    Complex f = std::polar(1.0, -2 * pi * k * t);
    for (Complex& x : v) x *= f;
  }
  return FourierLoop(dim_, m);
}

double fourierS(const FourierLoop& xi, const FourierLoop& eta, const Gram& gram) {
  requireDim(xi, eta, gram);
  // Pairing k with −k on both sides gives −2π Σ_{k>0} k Im(ξ_kᵀ G conj η_k).
  double s = 0;
  for (const auto& [k, v] : xi.positiveModes()) s += k * sesq(v, eta.mode(k), gram).imag();
  return -2 * pi * s;
}

Complex fourierSBilinear(const std::map<int, CVec>& xi, const std::map<int, CVec>& eta, const Gram& gram) {
  Complex s = 0;
  for (const auto& [k, v] : xi) {
    auto it = eta.find(-k);
    if (it == eta.end()) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < it->second.size(); ++j) s += static_cast<double>(k) * v[i] * gram[i][j] * it->second[j];
  }
  return Complex(0, pi) * s;
}

FourierLoop applyJ(const FourierLoop& xi) { return xi.complexScaled(Complex(0, 1)); }

Complex innerJ(const FourierLoop& xi, const FourierLoop& eta, const Gram& gram) {
  return 2 * pi * Complex(fourierS(xi, applyJ(eta), gram), -fourierS(xi, eta, gram));
}

Gram toDouble(const RatMatrix& g) {
  Gram out(g.rows(), std::vector<double>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = g(i, j).get_d();
  return out;
}

Gram identityGram(std::size_t d) {
  Gram g(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) g[i][i] = 1;
  return g;
}

// ---------------------------------------------------------------------------

Frame::Frame(const std::vector<FourierLoop>& loops, Gram gram, double tol) : gram_(std::move(gram)) {
  for (const FourierLoop& l : loops) {
    FourierLoop r = l;
    for (const FourierLoop& b : basis_) r = r - b.complexScaled(innerJ(r, b, gram_));
    double n = std::sqrt(innerJ(r, r, gram_).real());
    if (n > tol) basis_.push_back(r.scaled(1 / n));
  }
}

CVec Frame::coords(const FourierLoop& xi) const {
  CVec c;
  for (const FourierLoop& b : basis_) c.push_back(innerJ(xi, b, gram_));
  return c;
}

// ---------------------------------------------------------------------------

FockVector FockVector::vacuum(std::size_t n, int cap) {
  FockVector v(n, cap);
  v.addTerm({}, 1);
  return v;
}

void FockVector::addTerm(const Monomial& m, Complex c) {
  if (static_cast<int>(m.size()) > cap_) return;
  terms_[m] += c;
}

FockVector FockVector::operator+(const FockVector& o) const {
  if (cap_ != o.cap_) fail(Errc::DegreeCapMismatch, "Fock vectors have different degree caps");
  FockVector r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] += c;
  return r;
}

FockVector FockVector::scaled(Complex c) const {
  FockVector r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

FockVector FockVector::product(const std::vector<CVec>& vs, int cap) {
  std::size_t n = vs.empty() ? 0 : vs[0].size();
  std::map<Monomial, Complex> cur{{{}, 1}};
  for (const CVec& v : vs) {
    std::map<Monomial, Complex> next;
    for (const auto& [m, c] : cur)
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == Complex(0)) continue;
        Monomial k = m;
        k.insert(std::upper_bound(k.begin(), k.end(), static_cast<int>(i), std::greater<int>()), static_cast<int>(i));
        next[k] += c * v[i];
      }
    cur = std::move(next);
  }
  FockVector out(n, cap);
  for (const auto& [m, c] : cur) out.addTerm(m, c);
  return out;
}

namespace {

double multiplicityFactorial(const Monomial& m) {
  double f = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    run = (i > 0 && m[i] == m[i - 1]) ? run + 1 : 1;
    f *= static_cast<double>(run);
  }
  return f;
}

} // namespace

Complex fockInner(const FockVector& u, const FockVector& v) {
  if (u.cap() != v.cap()) fail(Errc::DegreeCapMismatch, "Fock vectors have different degree caps");
  if (u.frameSize() != v.frameSize()) fail(Errc::Mismatch, "Fock vectors live over different frames");
  // The permanent of ⟨e_{a_i}, e_{b_j}⟩ over an orthonormal frame is α! when a = b and 0 otherwise.
  Complex s = 0;
  for (const auto& [m, c] : u.terms()) {
    auto it = v.terms().find(m);
    if (it != v.terms().end()) s += multiplicityFactorial(m) * c * std::conj(it->second);
  }
  return s;
}

Complex permanent(const std::vector<CVec>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Complex total = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    Complex prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) row += m[i][j];
      prod *= row;
    }
    int bits = __builtin_popcountll(mask);
    total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return total;
}

Complex symmetricPairing(const std::vector<CVec>& vs, const std::vector<CVec>& ws) {
  if (vs.size() != ws.size()) return 0;
  std::vector<CVec> m(vs.size(), CVec(ws.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j)
      for (std::size_t a = 0; a < vs[i].size(); ++a) m[i][j] += vs[i][a] * std::conj(ws[j][a]);
  return permanent(m);
}

FockVector coherent(const CVec& xi, int cap) {
  std::size_t n = xi.size();
  FockVector out(n, cap);
  // Coefficient of e^α in e^ξ is Π ξ_i^{α_i} / α!.
  std::vector<std::pair<Monomial, Complex>> layer{{{}, 1}};
  out.addTerm({}, 1);
  for (int deg = 1; deg <= cap; ++deg) {
    std::vector<std::pair<Monomial, Complex>> next;
    for (const auto& [m, c] : layer) {
      int top = m.empty() ? static_cast<int>(n) - 1 : m.back();
      for (int i = 0; i <= top; ++i) {
        Monomial k = m;
        k.push_back(i);
        std::size_t mult = static_cast<std::size_t>(std::count(k.begin(), k.end(), i));
        Complex v = c * xi[static_cast<std::size_t>(i)] / static_cast<double>(mult);
        out.addTerm(k, v);
        next.emplace_back(std::move(k), v);
      }
    }
    layer = std::move(next);
  }
  return out;
}

Complex coherentInner(const CVec& xi, const CVec& eta, int cap) { return fockInner(coherent(xi, cap), coherent(eta, cap)); }

double coherentTailBound(double x, int cap) {
  return std::exp((cap + 1) * std::log(std::max(x, 1e-300)) + x - std::lgamma(cap + 2.0));
}

FockVector CoherentSum::toFock(std::size_t n, int cap) const {
  FockVector out(n, cap);
  for (const auto& [c, k] : terms) out = out + coherent(k, cap).scaled(c);
  return out;
}

namespace {

Complex plainInner(const CVec& a, const CVec& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

} // namespace

CoherentSum weylApply(const CVec& xi, Complex z, const CoherentSum& v) {
  CoherentSum out;
  Complex self = plainInner(xi, xi);
  for (const auto& [c, k] : v.terms) {
    CVec moved(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) moved[i] = k[i] + xi[i];
    out.terms.emplace_back(c * z * std::exp(-0.5 * self - plainInner(k, xi)), moved);
  }
  return out;
}

HeisenbergElement heisenbergMultiply(const HeisenbergElement& a, const HeisenbergElement& b, const Gram& gram) {
  double s = fourierS(a.xi, b.xi, gram);
  return {a.xi + b.xi, a.z * b.z * std::polar(1.0, -2 * pi * s)};
}

std::vector<Int> energyDims(int d, int order) {
  // Enumerate monomials in the modes (k, colour) directly, as weakly decreasing
  // sequences of mode labels k·d + colour, tallying their energy Σ k.
  std::vector<Int> dims(static_cast<std::size_t>(order) + 1, 0);
  std::vector<int> stack;
  auto rec = [&](auto& self, int maxLabel, int energy) -> void {
    ++dims[static_cast<std::size_t>(energy)];
    for (int label = maxLabel; label >= 0; --label) {
      int k = label / d + 1;
      if (energy + k > order) continue;
      self(self, label, energy + k);
    }
  };
  if (order >= 0) rec(rec, order * d - 1, 0);
  return dims;
}

FourierLoop randomFourierLoop(Rng& rng, std::size_t dim, int maxMode, double maxNormJ, const Gram& gram) {
  std::map<int, CVec> m;
  for (int k = 1; k <= maxMode; ++k) {
    if (!rng.coin()) continue;
    CVec v(dim);
    for (Complex& c : v) c = Complex(2 * rng.unit() - 1, 2 * rng.unit() - 1);
    m[k] = v;
  }
  if (m.empty()) {
    CVec v(dim);
    v[0] = 1;
    m[1] = v;
  }
  FourierLoop xi(dim, m);
  double n = std::sqrt(innerJ(xi, xi, gram).real());
  double target = maxNormJ * (0.1 + 0.9 * rng.unit());
  return xi.scaled(target / n);
}

} // namespace bicol
