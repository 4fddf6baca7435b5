#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicol {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

enum class Errc {
  NotSymmetric,
  Degenerate,
  NotPositiveDefinite,
  UnknownName,
  BadRank,
  NotEven,
  TooLarge,
  NotIsotropic,
  NotIsometry,
  RankMismatch,
  NotContained,
  NotInSumLattice,
  SupportOverlap,
  WindingNotInSum,
  EndpointMismatch,
  SupportViolation,
  Mismatch,
  PeriodMismatch,
  DegreeCapMismatch,
  NotInLattice,
  ParseError,
  InvalidArgument,
};

const char* errcName(Errc e);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// ---------------------------------------------------------------------------
// Scalars

Int floorDiv(const Int& a, const Int& b);
Int floorOf(const Rat& r);
Int ceilOf(const Rat& r);
Rat makeRat(const Int& num, const Int& den);
Rat fracPart(const Rat& r); // r - floor(r), in [0,1)
bool isInteger(const Rat& r);
Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
long toLong(const Int& v);

// "p/q" or "p" (denominator 1 elided); parse accepts both.
std::string ratToString(const Rat& r);
Rat parseRat(const std::string& s);

// ---------------------------------------------------------------------------
// Dense matrices, row-major.

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix fromRows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) fail(Errc::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix fromColumns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(Errc::InvalidArgument, "ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void setCol(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swapRows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swapCols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row_i += f * row_k
  void addRow(std::size_t i, std::size_t k, const T& f) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += f * (*this)(k, j);
  }
  void addCol(std::size_t j, std::size_t k, const T& f) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += f * (*this)(i, k);
  }
  void negateRow(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(Errc::InvalidArgument, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::InvalidArgument, "matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::InvalidArgument, "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (v.size() != cols_) fail(Errc::InvalidArgument, "matrix-vector shape mismatch");
    std::vector<T> r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    }
    return r;
  }

  const std::vector<T>& data() const { return a_; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix toRat(const IntMatrix& m);
RatVec toRat(const IntVec& v);
bool isIntegral(const RatMatrix& m);
bool isIntegral(const RatVec& v);
IntMatrix toInt(const RatMatrix& m); // throws unless integral
IntVec toInt(const RatVec& v);

Int det(const IntMatrix& m); // Bareiss
Rat det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m); // throws Degenerate when singular
bool isSymmetric(const IntMatrix& m);

// Vector arithmetic over the rationals.
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& a);
RatVec neg(const RatVec& a);
bool isZero(const RatVec& a);
// x^T G y
// Least common denominator of the entries, and the entries rescaled by it.
Int commonDenominator(const std::vector<RatVec>& vs);
Int commonDenominator(const RatVec& v);
IntVec scaledToInt(const RatVec& v, const Int& d);
Rat form(const RatMatrix& g, const RatVec& x, const RatVec& y);
Rat dot(const RatVec& a, const RatVec& b);

// ---------------------------------------------------------------------------
// Normal forms.

struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
};
// Row-style: H = U*M, U unimodular, H echelon with positive pivots and
// entries above each pivot reduced into [0, pivot). Zero rows last.
HermiteResult hermiteNormalForm(const IntMatrix& m);

struct SmithResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
};
// D = U*M*V diagonal, d_1 | d_2 | ..., nonnegative.
SmithResult smithNormalForm(const IntMatrix& m);

// Integer solution of A x = b, or nullopt. The returned solution is reduced
// modulo the integer kernel of A (kernel basis in Hermite form, pivot
// coordinates in [0, pivot)), so it depends only on (A, b).
std::optional<IntVec> solveDiophantine(const IntMatrix& a, const IntVec& b);

// Rows form a basis of {x : A x = 0} over the integers, in Hermite form.
IntMatrix integerKernel(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Q/Z phases. All cocycle values are stored as a rational class mod 1.

class Angle {
public:
  Angle() = default;
  explicit Angle(const Rat& v) : v_(fracPart(v)) {}
  static Angle zero() { return Angle(); }
  const Rat& value() const { return v_; }
  bool isZero() const { return v_ == 0; }
  // Least n > 0 with n*value in Z.
  Int order() const { return v_.get_den(); }

  Angle operator+(const Angle& o) const { return Angle(v_ + o.v_); }
  Angle operator-(const Angle& o) const { return Angle(v_ - o.v_); }
  Angle operator-() const { return Angle(-v_); }
  Angle& operator+=(const Angle& o) { return *this = *this + o; }
  Angle& operator-=(const Angle& o) { return *this = *this - o; }
  Angle times(const Int& k) const { return Angle(v_ * Rat(k)); }
  bool operator==(const Angle& o) const { return v_ == o.v_; }
  bool operator!=(const Angle& o) const { return v_ != o.v_; }
  bool operator<(const Angle& o) const { return v_ < o.v_; }
  std::string str() const { return ratToString(v_); }

private:
  Rat v_{0};
};

} // namespace bicol
