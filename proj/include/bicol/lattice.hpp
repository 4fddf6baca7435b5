#pragma once

#include "bicol/foundation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bicol {

enum class Definiteness { Positive, Negative, Indefinite };

const char* definitenessName(Definiteness d);

// An integral lattice given by its Gram matrix in a fixed basis.
class Lattice {
public:
  Lattice() = default;

  const std::optional<std::string>& name() const { return name_; }
  const IntMatrix& gram() const { return gram_; }
  const RatMatrix& gramQ() const { return gramQ_; }
  std::size_t rank() const { return gram_.rows(); }
  bool even() const { return even_; }
  Definiteness definiteness() const { return def_; }
  bool positiveDefinite() const { return def_ == Definiteness::Positive; }
  const Int& det() const { return det_; }
  Int disc() const { return abs(det_); }

  Rat pair(const RatVec& x, const RatVec& y) const { return form(gramQ_, x, y); }
  Rat norm(const RatVec& x) const { return form(gramQ_, x, x); }

  friend Lattice makeLattice(const IntMatrix& gram, std::optional<std::string> name);

private:
  std::optional<std::string> name_;
  IntMatrix gram_;
  RatMatrix gramQ_;
  bool even_ = true;
  Definiteness def_ = Definiteness::Positive;
  Int det_ = 1;
};

// Errors: NotSymmetric, Degenerate.
Lattice makeLattice(const IntMatrix& gram, std::optional<std::string> name = std::nullopt);

// A full-rank lattice inside Q^n with a fixed nondegenerate rational form.
// The basis (columns) is the Hermite-normalized one, so equal lattices have
// equal bases.
class RationalSublattice {
public:
  RationalSublattice() = default;
  // `generators` columns span the lattice; they may be redundant.
  RationalSublattice(RatMatrix ambientGram, const RatMatrix& generators);

  std::size_t ambientRank() const { return ambientGram_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const RatMatrix& ambientGram() const { return ambientGram_; }
  const RatMatrix& basis() const { return basis_; }
  RatVec basisVector(std::size_t i) const { return basis_.col(i); }

  RatVec coords(const RatVec& v) const { return basisInv_ * v; }
  RatVec fromCoords(const RatVec& c) const { return basis_ * c; }
  bool contains(const RatVec& v) const { return isIntegral(coords(v)); }
  bool contains(const RationalSublattice& other) const;
  RatMatrix gramInBasis() const;
  // Representative of v + L whose coordinates lie in [0,1).
  RatVec reduce(const RatVec& v) const;

  bool operator==(const RationalSublattice& o) const {
    return basis_ == o.basis_ && ambientGram_ == o.ambientGram_;
  }

private:
  RatMatrix ambientGram_;
  RatMatrix basis_;
  RatMatrix basisInv_;
};

RationalSublattice wholeLattice(const Lattice& l);
// Basis gram^{-1}, i.e. the dual basis, then Hermite-normalized.
RationalSublattice dualLattice(const Lattice& l);
RationalSublattice dualOf(const RationalSublattice& s);
RationalSublattice latticeSum(const RationalSublattice& a, const RationalSublattice& b);
RationalSublattice latticeIntersection(const RationalSublattice& a, const RationalSublattice& b);

struct VectorWithNorm {
  RatVec coords;
  Rat norm;
};

// All integer x with (x+t)^T G (x+t) <= maxNorm, reported as y = x+t.
// G must be positive definite. Sorted lexicographically by x.
std::vector<VectorWithNorm> enumerateCoset(const RatMatrix& gram, const RatVec& translate,
                                           const Rat& maxNorm);

// Nonzero lattice vectors with norm <= maxNorm. Error: NotPositiveDefinite.
std::vector<VectorWithNorm> shortVectors(const Lattice& l, const Rat& maxNorm);

Lattice directSum(const Lattice& a, const Lattice& b);

// A lattice from the catalog together with its basis in Euclidean
// coordinates (columns), when it has one.
struct CatalogLattice {
  Lattice lattice;
  std::optional<RatMatrix> euclidean;
};

// name in {A, D, E6, E7, E8, U, Z}; n required for A (n>=1), D (n>=3), Z (n>=1).
// Errors: UnknownName, BadRank.
CatalogLattice builtinModel(const std::string& name, std::optional<int> n = std::nullopt);
Lattice builtin(const std::string& name, std::optional<int> n = std::nullopt);
// Parses compact names such as "A2", "D8", "E8", "U", "Z2".
Lattice builtinByName(const std::string& text);
CatalogLattice builtinModelByName(const std::string& text);

} // namespace bicol
