#pragma once

#include "bicol/lattice.hpp"

#include <optional>
#include <vector>

namespace bicol {

// The finite group A/B for full-rank B inside A. Elements are coordinate
// vectors x with 0 <= x_i < d_i against the generator lifts.
class FiniteAbelianPresentation {
public:
  FiniteAbelianPresentation() = default;
  // Error: NotContained unless bottom is a sublattice of top.
  FiniteAbelianPresentation(const RationalSublattice& top, const RationalSublattice& bottom);

  const std::vector<Int>& invariantFactors() const { return factors_; }
  std::size_t ngens() const { return factors_.size(); }
  // Columns, in ambient coordinates.
  const RatMatrix& generatorLifts() const { return lifts_; }
  Int order() const;
  Int exponent() const { return factors_.empty() ? Int(1) : factors_.back(); }
  const RationalSublattice& top() const { return top_; }
  const RationalSublattice& bottom() const { return bottom_; }

  // Error: NotContained when v is not in the top lattice.
  IntVec coordinates(const RatVec& v) const;
  IntVec reduce(const IntVec& x) const;
  // Representative of the class with coordinates in [0,1) against the bottom basis.
  RatVec lift(const IntVec& x) const;
  // All elements, lexicographic in coordinates. Error: TooLarge above `bound`.
  std::vector<IntVec> elements(const Int& bound = 10000) const;
  IntVec add(const IntVec& x, const IntVec& y) const;
  IntVec negate(const IntVec& x) const;
  bool isZero(const IntVec& x) const;

private:
  RationalSublattice top_, bottom_;
  std::vector<Int> factors_;
  RatMatrix lifts_;
  RatMatrix toGen_; // rows: ambient -> generator coordinates
};

FiniteAbelianPresentation finiteQuotient(const RationalSublattice& top, const RationalSublattice& bottom);
FiniteAbelianPresentation discriminantGroup(const Lattice& l);

struct DiscForms {
  Angle b;
  std::optional<Rat> q; // in [0,2), present when x == y and the lattice is even
};

Angle discB(const Lattice& l, const FiniteAbelianPresentation& d, const IntVec& x, const IntVec& y);
// Error: NotEven.
Rat discQ(const Lattice& l, const FiniteAbelianPresentation& d, const IntVec& x);
DiscForms evalDiscForm(const Lattice& l, const FiniteAbelianPresentation& d, const IntVec& x, const IntVec& y);

enum class IsoKind { B, Q };

class DiscSubgroup {
public:
  DiscSubgroup() = default;
  DiscSubgroup(const FiniteAbelianPresentation& parent, std::vector<IntVec> generators);

  // Reduced generators (rows of the Hermite key, nonzero ones only).
  const std::vector<IntVec>& generators() const { return gens_; }
  // Hermite basis of the preimage of the subgroup in Z^r; equal keys mean equal subgroups.
  const IntMatrix& key() const { return key_; }
  const Int& order() const { return order_; }
  bool contains(const IntVec& x) const;
  bool operator==(const DiscSubgroup& o) const { return key_ == o.key_; }

private:
  std::vector<IntVec> gens_;
  IntMatrix key_;
  Int order_ = 1;
};

// Trivial subgroup first; sorted by (order, key). Errors: TooLarge, NotEven.
std::vector<DiscSubgroup> isotropicSubgroups(const Lattice& l, IsoKind kind, const Int& bound = 10000);

bool isIsotropic(const Lattice& l, const FiniteAbelianPresentation& d, const DiscSubgroup& u, IsoKind kind);

struct Overlattice {
  Lattice lattice;
  RationalSublattice sublattice; // in the coordinates of the original lattice
  bool even = false;
};

// Error: NotIsotropic when b does not vanish on U.
Overlattice overlatticeFromIsotropic(const Lattice& l, const DiscSubgroup& u);

// The subgroup M/Λ for Λ ⊆ M ⊆ Λ^∨. Error: NotContained.
DiscSubgroup subgroupOf(const FiniteAbelianPresentation& d, const RationalSublattice& m);

// U^⊥/U against D of the overlattice: lifts of U^⊥ land in the dual of Λ_U,
// the kernel is U, the sizes match and b, q agree when computed in Λ_U.
bool perpQuotientMatches(const Lattice& l, const DiscSubgroup& u);

} // namespace bicol
