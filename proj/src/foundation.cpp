#include "bicol/foundation.hpp"

#include <algorithm>

namespace bicol {

const char* errcName(Errc e) {
  switch (e) {
  case Errc::NotSymmetric: return "NotSymmetric";
  case Errc::Degenerate: return "Degenerate";
  case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
  case Errc::UnknownName: return "UnknownName";
  case Errc::BadRank: return "BadRank";
  case Errc::NotEven: return "NotEven";
  case Errc::TooLarge: return "TooLarge";
  case Errc::NotIsotropic: return "NotIsotropic";
  case Errc::NotIsometry: return "NotIsometry";
  case Errc::RankMismatch: return "RankMismatch";
  case Errc::NotContained: return "NotContained";
  case Errc::NotInSumLattice: return "NotInSumLattice";
  case Errc::SupportOverlap: return "SupportOverlap";
  case Errc::WindingNotInSum: return "WindingNotInSum";
  case Errc::EndpointMismatch: return "EndpointMismatch";
  case Errc::SupportViolation: return "SupportViolation";
  case Errc::Mismatch: return "Mismatch";
  case Errc::PeriodMismatch: return "PeriodMismatch";
  case Errc::DegreeCapMismatch: return "DegreeCapMismatch";
  case Errc::NotInLattice: return "NotInLattice";
  case Errc::ParseError: return "ParseError";
  case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Int floorDiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floorOf(const Rat& r) { return floorDiv(r.get_num(), r.get_den()); }

Int ceilOf(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat makeRat(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat fracPart(const Rat& r) { return r - Rat(floorOf(r)); }

bool isInteger(const Rat& r) { return r.get_den() == 1; }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

long toLong(const Int& v) {
  if (!v.fits_slong_p()) fail(Errc::TooLarge, "integer does not fit a machine word: " + v.get_str());
  return v.get_si();
}

std::string ratToString(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parseRat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
    return makeRat(num, den);
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "not a rational: '" + s + "'");
  }
}

RatMatrix toRat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVec toRat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

bool isIntegral(const RatMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rat& x) { return isInteger(x); });
}

bool isIntegral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return isInteger(x); });
}

IntMatrix toInt(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!isInteger(m(i, j))) fail(Errc::InvalidArgument, "matrix entry is not an integer");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

IntVec toInt(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!isInteger(v[i])) fail(Errc::InvalidArgument, "vector entry is not an integer");
    r[i] = v[i].get_num();
  }
  return r;
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::InvalidArgument, "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swapRows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::InvalidArgument, "determinant of non-square matrix");
  std::size_t n = m.rows();
  RatMatrix a = m;
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swapRows(p, k);
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::InvalidArgument, "inverse of non-square matrix");
  std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) fail(Errc::Degenerate, "singular matrix");
    a.swapRows(p, k);
    inv.swapRows(p, k);
    Rat piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

bool isSymmetric(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::InvalidArgument, "vector length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::InvalidArgument, "vector length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& s, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

RatVec neg(const RatVec& a) { return scale(Rat(-1), a); }

bool isZero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Int commonDenominator(const RatVec& v) {
  Int d = 1;
  for (const Rat& x : v)
    if (mpz_cmp_ui(x.get_den_mpz_t(), 1) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

Int commonDenominator(const std::vector<RatVec>& vs) {
  Int d = 1;
  for (const RatVec& v : vs)
    for (const Rat& x : v)
      if (mpz_cmp_ui(x.get_den_mpz_t(), 1) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

IntVec scaledToInt(const RatVec& v, const Int& d) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() == d) {
      out[i] = v[i].get_num();
      continue;
    }
    mpz_divexact(out[i].get_mpz_t(), d.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] *= v[i].get_num();
  }
  return out;
}

Rat form(const RatMatrix& g, const RatVec& x, const RatVec& y) {
  if (g.rows() != x.size() || g.cols() != y.size()) fail(Errc::InvalidArgument, "form shape mismatch");
  Int dx = commonDenominator(x), dy = commonDenominator(y), dg = commonDenominator(g.data());
  IntVec xi = scaledToInt(x, dx), yi = scaledToInt(y, dy);
  Int s = 0, t, gij;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(xi[i]) == 0) continue;
    t = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const Rat& e = g(i, j);
      if (sgn(e) == 0 || sgn(yi[j]) == 0) continue;
      if (dg == 1) {
        mpz_addmul(t.get_mpz_t(), e.get_num_mpz_t(), yi[j].get_mpz_t());
        continue;
      }
      mpz_divexact(gij.get_mpz_t(), dg.get_mpz_t(), e.get_den_mpz_t());
      gij *= e.get_num();
      mpz_addmul(t.get_mpz_t(), gij.get_mpz_t(), yi[j].get_mpz_t());
    }
    mpz_addmul(s.get_mpz_t(), xi[i].get_mpz_t(), t.get_mpz_t());
  }
  return makeRat(s, dx * dy * dg);
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::InvalidArgument, "vector length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------

HermiteResult hermiteNormalForm(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  HermiteResult res{m, IntMatrix::identity(rows), 0};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == rows) break;
      h.swapRows(r, best);
      u.swapRows(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Int q = floorDiv(h(i, c), h(r, c));
        h.addRow(i, r, Int(-q));
        u.addRow(i, r, Int(-q));
        if (h(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negateRow(r);
      u.negateRow(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floorDiv(h(i, c), h(r, c));
      if (q == 0) continue;
      h.addRow(i, r, Int(-q));
      u.addRow(i, r, Int(-q));
    }
    ++r;
  }
  res.rank = r;
  return res;
}

SmithResult smithNormalForm(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  SmithResult res{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = res.D;
  IntMatrix& u = res.U;
  IntMatrix& v = res.V;
  std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Move the smallest nonzero entry of the trailing block to the pivot.
    auto movePivot = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return false;
      d.swapRows(t, bi);
      u.swapRows(t, bi);
      d.swapCols(t, bj);
      v.swapCols(t, bj);
      return true;
    };
    if (!movePivot()) break;
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floorDiv(d(i, t), d(t, t));
        d.addRow(i, t, Int(-q));
        u.addRow(i, t, Int(-q));
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floorDiv(d(t, j), d(t, t));
        d.addCol(j, t, Int(-q));
        v.addCol(j, t, Int(-q));
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Bring the smallest remaining entry of row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) { bi = t; bj = j; }
        d.swapRows(t, bi);
        u.swapRows(t, bi);
        d.swapCols(t, bj);
        v.swapCols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility on the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.addRow(t, bad, Int(1));
      u.addRow(t, bad, Int(1));
    }
    if (d(t, t) < 0) {
      d.negateRow(t);
      u.negateRow(t);
    }
  }
  return res;
}

IntMatrix integerKernel(const IntMatrix& a) {
  // Row HNF of A^T: H = U A^T. Rows of U beyond the rank span ker A.
  HermiteResult h = hermiteNormalForm(a.transpose());
  std::size_t n = a.cols(), k = n - h.rank;
  IntMatrix ker(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) ker(i, j) = h.U(h.rank + i, j);
  if (k == 0) return ker;
  return hermiteNormalForm(ker).H;
}

std::optional<IntVec> solveDiophantine(const IntMatrix& a, const IntVec& b) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) fail(Errc::InvalidArgument, "right-hand side length mismatch");
  // A^T = U^{-1} H, so A x = b  <=>  H^T y = b with x = U^T y.
  HermiteResult h = hermiteNormalForm(a.transpose());
  IntVec y(n);
  IntVec rest = b;
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rank; ++i) {
    while (h.H(i, c) == 0) ++c;
    // Columns before the pivot are already matched by earlier rows.
    if (rest[c] % h.H(i, c) != 0) return std::nullopt;
    y[i] = rest[c] / h.H(i, c);
    for (std::size_t j = 0; j < m; ++j) rest[j] -= y[i] * h.H(i, j);
  }
  for (const Int& r : rest)
    if (r != 0) return std::nullopt;
  IntVec x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < h.rank; ++j) x[i] += h.U(j, i) * y[j];
  // Canonical representative modulo the kernel.
  IntMatrix ker = integerKernel(a);
  std::size_t col = 0;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    while (ker(i, col) == 0) ++col;
    Int q = floorDiv(x[col], ker(i, col));
    if (q != 0)
      for (std::size_t j = 0; j < n; ++j) x[j] -= q * ker(i, j);
  }
  return x;
}

} // namespace bicol
