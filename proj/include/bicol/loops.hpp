#pragma once

#include "bicol/path.hpp"
#include "bicol/random.hpp"
#include "bicol/span.hpp"

#include <optional>

namespace bicol {

// ---------------------------------------------------------------------------
// Unicoloured loops: a loop in T = Λ⊗R/Λ is stored as a lift ξ with ξ(1) − ξ(0) ∈ Λ,
// in the coordinates of the lattice basis.

struct Extended {
  PLPath loop;
  Angle phase;
};

struct Decomposition {
  RatVec torus;   // coordinates in [0,1)
  PLPath vPart;   // zero average
  IntVec winding;
};

struct CommutatorValues {
  Angle viaCocycle;
  Angle closedForm;
};

// Degree-two cochain r(λ,μ) = ε(gλ,gμ) − ε(λ,μ) and e with δe = r.
struct Coboundary {
  IntMatrix g;
  RatMatrix r; // r(λ,μ) = λ^T r μ mod 1
  Angle e(const IntVec& lambda) const;
  Angle ratio(const IntVec& lambda, const IntVec& mu) const;
};

class LoopGroup {
public:
  explicit LoopGroup(Lattice l);
  LoopGroup(Lattice l, RatMatrix epsilon);

  const Lattice& lattice() const { return lattice_; }
  const RatMatrix& epsilon() const { return epsilon_; }
  std::size_t rank() const { return lattice_.rank(); }

  // Error: NotInLattice unless the winding is integral.
  PLPath validate(const PLPath& lift) const;
  IntVec winding(const PLPath& lift) const;
  Decomposition decompose(const PLPath& lift) const;
  PLPath recompose(const Decomposition& d) const;

  Rat bilinearS(const PLPath& xi, const PLPath& eta) const;
  Angle epsilonOf(const IntVec& a, const IntVec& b) const;
  Angle cocycle(const PLPath& gamma, const PLPath& rho) const;
  CommutatorValues commutator(const PLPath& gamma, const PLPath& rho) const;

  bool sameLoop(const PLPath& a, const PLPath& b) const;
  bool same(const Extended& a, const Extended& b) const;
  Extended unit() const;
  Extended multiply(const Extended& a, const Extended& b) const;
  Extended inverse(const Extended& a) const;

  IntervalSet support(const PLPath& lift) const;

  Angle reparamD(const PLReparam& phi, const PLPath& gamma) const;
  Extended act(const PLReparam& phi, const Extended& x) const;
  // Error: SupportOverlap. Returns the phase picked up; the loop is checked unchanged.
  Angle localTrivialityCheck(const PLReparam& phi, const PLPath& gamma) const;

  // ⟨Δγ,Δγ⟩ mod 2.
  int parity(const PLPath& gamma) const;

  // Error: NotIsometry.
  Coboundary solveCoboundary(const IntMatrix& g) const;
  Extended autAction(const Coboundary& c, const Extended& x) const;

private:
  Lattice lattice_;
  RatMatrix epsilon_;
};

// ---------------------------------------------------------------------------
// Bicoloured loops. The black half is θ ∈ [0,1/2], the white half [1/2,1];
// p sits at 1/2 and q at 0. The lift lives in Γ⊗Q, mq lifts the value at q.

struct BicolouredLoop {
  PLPath lift;
  RatVec mq;
};

struct BicolExtended {
  BicolouredLoop loop;
  Angle phase;
};

enum class Colour { H, White, Black };

class BicolouredGroup {
public:
  explicit BicolouredGroup(LatticeSpan span);

  const LatticeSpan& span() const { return span_; }
  const SpanDerived& derived() const { return span_.derived(); }
  std::size_t rank() const { return span_.rank(); }

  // Errors: WindingNotInSum, EndpointMismatch.
  BicolouredLoop make(const PLPath& lift, const RatVec& mq) const;
  const PLPath& pth(const BicolouredLoop& g) const { return g.lift; }
  RatVec deltaPrime(const BicolouredLoop& g) const { return g.lift.delta(); }
  ClassPair deltaClass(const BicolouredLoop& g) const;
  BicolouredLoop standardLoop(const ClassPair& c) const;
  // Error: SupportViolation.
  BicolouredLoop embed(Colour which, const PLPath& lift) const;

  BicolouredLoop add(const BicolouredLoop& a, const BicolouredLoop& b) const;
  BicolouredLoop negate(const BicolouredLoop& a) const;
  BicolouredLoop zero() const;
  bool sameLoop(const BicolouredLoop& a, const BicolouredLoop& b) const;
  bool same(const BicolExtended& a, const BicolExtended& b) const;
  // Paths in P(H, (Λw−Λb)/Γ) agree: lifts differ by a constant in Γ.
  bool samePath(const PLPath& a, const PLPath& b) const;

  Rat bilinearS(const PLPath& xi, const PLPath& eta) const;
  Angle cocycle(const BicolouredLoop& g, const BicolouredLoop& r) const;
  // Split at p into white and black integrals with the glued data.
  Angle cocycleBicolouredFashion(const BicolouredLoop& g, const BicolouredLoop& r) const;
  CommutatorValues commutator(const BicolouredLoop& g, const BicolouredLoop& r) const;

  BicolExtended unit() const;
  BicolExtended multiply(const BicolExtended& a, const BicolExtended& b) const;
  BicolExtended inverse(const BicolExtended& a) const;

  IntervalSet support(const BicolouredLoop& g) const;
  // A bicoloured interval does not contain both p and q.
  static bool isBicolouredInterval(const Rat& a, const Rat& b);

  Angle reparamD(const PLReparam& phi, const BicolouredLoop& g) const;
  BicolouredLoop pushforward(const PLReparam& phi, const BicolouredLoop& g) const;
  // Error: PeriodMismatch unless the span level divides the period.
  BicolExtended act(const PLReparam& phi, const BicolExtended& x) const;

  // Unicoloured groups of the white and black lattices with the induced ε.
  LoopGroup whiteGroup() const;
  LoopGroup blackGroup() const;
  LoopGroup gammaGroup() const;

private:
  LatticeSpan span_;
};

// ---------------------------------------------------------------------------
// Random data for the identity suites.

struct RandomLoopParams {
  int maxPieces = 8;
  long maxDen = 12;
  long valueBound = 2;
  long windingBound = 3;
};

PLPath randomPath(Rng& rng, const RatVec& start, const RatVec& end, const RandomLoopParams& p = {});
PLPath randomLoop(Rng& rng, const LoopGroup& grp, const RandomLoopParams& p = {});
// Loop supported in the closed arc from a to b (b < a wraps through 0).
PLPath randomLoopOnArc(Rng& rng, const LoopGroup& grp, const Rat& a, const Rat& b, const RandomLoopParams& p = {});
RatVec randomVectorIn(Rng& rng, const RationalSublattice& s, long bound);
PLReparam randomReparam(Rng& rng, long period, int maxPieces = 4, long maxDen = 12);
// Identity outside the arc from a to b (b < a wraps through 0).
PLReparam randomReparamOnArc(Rng& rng, const Rat& a, const Rat& b, long period);

BicolouredLoop randomBicoloured(Rng& rng, const BicolouredGroup& grp, const RandomLoopParams& p = {});
BicolouredLoop randomBicolouredOnArc(Rng& rng, const BicolouredGroup& grp, const Rat& a, const Rat& b,
                                     const RandomLoopParams& p = {});
ClassPair randomClass(Rng& rng, const BicolouredGroup& grp, long bound = 3);

} // namespace bicol
