#pragma once

#include "bicol/glue.hpp"

#include <memory>
#include <optional>
#include <string>

namespace bicol {

struct SpanDerived {
  RationalSublattice gamma;     // Γ itself, standard basis
  RationalSublattice preW;      // (Rπw)^{-1}(Λw)
  RationalSublattice preB;      // (Rπb)^{-1}(Λb)
  RationalSublattice intersection;
  RationalSublattice sum;       // Λw − Λb
  RationalSublattice dualGamma;
  Int level = 1;
  RatMatrix embedWInv, embedBInv;
  // ε(λ,μ) = λ^T E μ mod 1 for λ, μ in the sum lattice (Γ coordinates).
  RatMatrix epsilon;
  FiniteAbelianPresentation intersectionModGamma;
  FiniteAbelianPresentation dualModSum;
  IntMatrix classKey; // Hermite basis of the diagonal copy of Γ inside Z^{2n}
};

class LatticeSpan {
public:
  LatticeSpan() = default;

  const std::optional<std::string>& name() const { return name_; }
  const Lattice& gamma() const { return gamma_; }
  const Lattice& white() const { return white_; }
  const Lattice& black() const { return black_; }
  const IntMatrix& embedW() const { return embedW_; }
  const IntMatrix& embedB() const { return embedB_; }
  std::size_t rank() const { return gamma_.rank(); }
  const SpanDerived& derived() const { return *derived_; }

  friend LatticeSpan makeSpan(const Lattice&, const Lattice&, const Lattice&, const IntMatrix&, const IntMatrix&,
                              std::optional<std::string>);

private:
  std::optional<std::string> name_;
  Lattice gamma_, white_, black_;
  IntMatrix embedW_, embedB_;
  std::shared_ptr<const SpanDerived> derived_;
};

// Errors: RankMismatch, NotEven, NotIsometry, Degenerate (singular embedding).
LatticeSpan makeSpan(const Lattice& gamma, const Lattice& white, const Lattice& black, const IntMatrix& embedW,
                     const IntMatrix& embedB, std::optional<std::string> name = std::nullopt);

inline const SpanDerived& derive(const LatticeSpan& s) { return s.derived(); }

// "identity:<lattice>", "rank1-72", "d8pair". Error: UnknownName.
LatticeSpan builtinSpan(const std::string& name);

struct SumDecomposition {
  RatVec white; // in preW
  RatVec black; // in preB; λ = white − black
};

// Error: NotInSumLattice.
SumDecomposition decomposeSum(const LatticeSpan& s, const RatVec& lambda);

// b₀(λ,μ) = ½⟨μ,λ⟩ + ⟨μ,λ_b⟩ mod 1. Error: NotInSumLattice.
Angle commutatorB(const LatticeSpan& s, const RatVec& lambda, const RatVec& mu);
// Same, with the black part of λ supplied by the caller.
Angle commutatorBWith(const LatticeSpan& s, const RatVec& lambda, const RatVec& lambdaBlack, const RatVec& mu);

Angle epsilonCocycle(const LatticeSpan& s, const RatVec& lambda, const RatVec& mu);

// Bi-additive cocycle on Z^n, pinned to the standard basis, whose commutator is
// (−1)^{⟨λ,μ⟩ + ⟨λ,λ⟩⟨μ,μ⟩}; for even lattices this is (−1)^{⟨λ,μ⟩}.
RatMatrix standardEpsilon(const Lattice& l);

// ε restricted to a sublattice with the given basis (columns, Γ coordinates),
// expressed in that basis.
RatMatrix restrictEpsilon(const RatMatrix& epsilon, const RatMatrix& basis);

inline Angle epsilonAngle(const RatMatrix& e, const RatVec& x, const RatVec& y) { return Angle(form(e, x, y)); }

// Classes in (Λw ⊕ Λb)/Γ, represented by pairs of integer vectors.
struct ClassPair {
  IntVec white, black;
  bool operator==(const ClassPair& o) const { return white == o.white && black == o.black; }
};
ClassPair canonicalClass(const LatticeSpan& s, const ClassPair& c);
bool sameClass(const LatticeSpan& s, const ClassPair& a, const ClassPair& b);
// (Rπw)^{-1}λw − (Rπb)^{-1}λb, the bottom-row map into Λw − Λb.
RatVec classToSum(const LatticeSpan& s, const ClassPair& c);

} // namespace bicol
