#pragma once

#include "bicol/foundation.hpp"

#include <utility>
#include <vector>

namespace bicol {

// A closed subset of the circle [0,1]/(0~1) as sorted, merged closed intervals.
using IntervalSet = std::vector<std::pair<Rat, Rat>>;

IntervalSet mergeIntervals(IntervalSet s);
// Treats 0 and 1 as the same point.
bool circleIntersects(const IntervalSet& a, const IntervalSet& b);
bool circleContains(const IntervalSet& s, const Rat& t);

// Continuous path [0,1] -> Q^d, affine between breakpoints.
class PLPath {
public:
  PLPath() = default;
  // Error: InvalidArgument unless breakpoints run strictly from 0 to 1.
  PLPath(RatVec breakpoints, std::vector<RatVec> values);

  static PLPath constant(const RatVec& v);
  // θ ↦ a + θ(b − a)
  static PLPath linear(const RatVec& a, const RatVec& b);

  std::size_t dim() const { return values_.empty() ? 0 : values_[0].size(); }
  const RatVec& breakpoints() const { return t_; }
  const std::vector<RatVec>& values() const { return values_; }
  std::size_t pieces() const { return t_.size() - 1; }

  RatVec at(const Rat& t) const;
  // at() over increasing points in [0,1], walking the pieces once.
  std::vector<RatVec> sampleSorted(const RatVec& xs) const;
  const RatVec& front() const { return values_.front(); }
  const RatVec& back() const { return values_.back(); }
  RatVec delta() const { return sub(back(), front()); }
  // Quasi-periodic extension: Ξ(t + k) = ξ(t) + kΔ.
  RatVec extended(const Rat& t) const;
  RatVec integral() const;

  PLPath refinedTo(const RatVec& breakpoints) const;
  PLPath withBreakpoint(const Rat& t) const;
  // Drops breakpoints where the path does not bend.
  PLPath simplified() const;
  PLPath mapped(const RatMatrix& m) const;
  PLPath shifted(const RatVec& v) const;
  PLPath scaled(const Rat& s) const;
  PLPath operator-() const { return scaled(-1); }

  friend PLPath operator+(const PLPath& a, const PLPath& b);
  friend PLPath operator-(const PLPath& a, const PLPath& b);
  friend bool operator==(const PLPath& a, const PLPath& b);

private:
  RatVec t_;
  std::vector<RatVec> values_;
};

RatVec mergeBreakpoints(const RatVec& a, const RatVec& b);

// ∫ ⟨ξ′, η⟩_G dθ over [a,b] ⊆ [0,1], exact.
Rat integralDerivPair(const RatMatrix& g, const PLPath& xi, const PLPath& eta, const Rat& a = 0, const Rat& b = 1);

// Orientation-preserving PL homeomorphism Φ of R with Φ(x+1) = Φ(x)+1,
// taken modulo translation by `period`; stored on one fundamental domain.
class PLReparam {
public:
  PLReparam() = default;
  // values[i] = Φ(breakpoints[i]); breakpoints run from 0 to 1.
  PLReparam(RatVec breakpoints, RatVec values, long period = 1);

  static PLReparam identity(long period = 1);
  static PLReparam rotation(const Rat& theta, long period = 1);

  long period() const { return period_; }
  const RatVec& breakpoints() const { return t_; }
  const RatVec& values() const { return v_; }

  Rat operator()(const Rat& x) const;
  Rat inverse(const Rat& y) const;
  // Closure of {x : Φ(x) ≠ x} inside [0,1].
  IntervalSet support() const;
  bool operator==(const PLReparam& o) const;

  friend PLReparam compose(const PLReparam& psi, const PLReparam& phi);

private:
  RatVec t_, v_;
  long period_ = 1;
};

// θ ↦ Ξ(Φ^{-1}(θ)) on [0,1].
PLPath pushforward(const PLReparam& phi, const PLPath& xi);

} // namespace bicol
