#pragma once

#include "bicol/span.hpp"

#include <vector>

namespace bicol {

// Σ_k coeffs[k] q^{(start+k)/denom}, known for exponents up to (start+len−1)/denom.
class FracSeries {
public:
  FracSeries() = default;
  FracSeries(long denom, long start, std::vector<Int> coeffs);

  long denom() const { return denom_; }
  long start() const { return start_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Rat exponent(std::size_t k) const { return makeRat(start_ + static_cast<long>(k), denom_); }
  Rat top() const { return exponent(coeffs_.size() - 1); }
  // Zero for exponents off the grid or below the start; error outside the known range.
  Int coefficientAt(const Rat& e) const;

  // Same series on the finer grid with denominator m (a multiple of denom).
  FracSeries regrid(long m) const;
  FracSeries shifted(const Rat& e) const;
  FracSeries truncated(const Rat& maxExp) const;
  // Coarsest grid and first nonzero start that represent the same data.
  FracSeries canonical() const;

  friend FracSeries operator*(const FracSeries& a, const FracSeries& b);
  // Known range is the smaller of the two.
  friend FracSeries operator+(const FracSeries& a, const FracSeries& b);
  friend bool operator==(const FracSeries& a, const FracSeries& b) {
    return a.denom_ == b.denom_ && a.start_ == b.start_ && a.coeffs_ == b.coeffs_;
  }

private:
  long denom_ = 1;
  long start_ = 0;
  std::vector<Int> coeffs_{Int(1)};
};

// ∏_{j≥1} (1 − q^j)^{−d} to order q^K.
FracSeries etaInversePower(int d, int order);

// Σ_{λ ∈ translate + S} q^{⟨λ,λ⟩/2} up to maxExp. Error: NotPositiveDefinite.
FracSeries thetaSeries(const RationalSublattice& s, const RatVec& translate, const Rat& maxExp);

// θ_{l+S} · ∏(1−q^j)^{−rank} · q^{−rank/24}, with θ taken up to exponent K.
FracSeries cosetCharacter(const RationalSublattice& s, const RatVec& l, int order);

// Errors: NotEven, NotPositiveDefinite, NotInLattice (l not in the dual).
FracSeries characterUnicoloured(const Lattice& l, const RatVec& label, int order);
FracSeries characterBicoloured(const LatticeSpan& span, const RatVec& label, int order);

} // namespace bicol
