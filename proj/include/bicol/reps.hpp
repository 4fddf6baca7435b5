#pragma once

#include "bicol/series.hpp"

#include <vector>

namespace bicol {

struct UnicolouredLabel {
  RatVec l; // in Λ^∨, lattice coordinates
  long m = 1;
};

struct BicolouredLabel {
  IntVec chi; // χ(g_i) = chi_i / d_i on the generators of (Λw∩Λb)/Γ
  RatVec l;   // in Γ^∨
  long m = 1;
};

// Least m > 0 with m⟨l,l⟩ ∈ 2Z and m ≥ atLeast.
long rotationCover(const RatMatrix& gram, const RatVec& l, long atLeast = 1);

// Errors: NotEven, NotPositiveDefinite.
std::vector<UnicolouredLabel> classifyUnicoloured(const Lattice& l);
std::vector<BicolouredLabel> classifyBicoloured(const LatticeSpan& s);

// Error: NotInLattice when l is not in the dual.
UnicolouredLabel makeLabel(const Lattice& lat, const RatVec& l);
// Error: NotInLattice.
BicolouredLabel makeLabel(const LatticeSpan& s, const IntVec& chi, const RatVec& l);

// Error: Mismatch on dimension disagreement.
bool isomorphicLabels(const Lattice& lat, const UnicolouredLabel& a, const UnicolouredLabel& b);
bool isomorphicLabels(const LatticeSpan& s, const BicolouredLabel& a, const BicolouredLabel& b);

// l ↦ l − λ. Error: NotInLattice.
UnicolouredLabel conjugateShift(const Lattice& lat, const UnicolouredLabel& a, const RatVec& lambda);
BicolouredLabel conjugateShift(const LatticeSpan& s, const BicolouredLabel& a, const RatVec& lambda);

struct RestrictionTerm {
  RatVec lambda;
  RatVec shifted; // l − λ
  Rat energy;     // ⟨l−λ, l−λ⟩/2
  FracSeries head; // q^{energy} ∏(1−q^j)^{−rank} q^{−rank/24}, known to `order`
};

// Every λ in the lattice (resp. Λw − Λb) with ⟨l−λ,l−λ⟩/2 ≤ maxNorm. Error: NotPositiveDefinite.
std::vector<RestrictionTerm> restrictionDecomposition(const Lattice& lat, const UnicolouredLabel& a,
                                                      const Rat& maxNorm, int order);
std::vector<RestrictionTerm> restrictionDecomposition(const LatticeSpan& s, const BicolouredLabel& a,
                                                      const Rat& maxNorm, int order);

// Σ heads; empty input gives the zero series on the integer grid.
FracSeries sumHeads(const std::vector<RestrictionTerm>& terms, int rank, int order);

} // namespace bicol
