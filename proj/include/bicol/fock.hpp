#pragma once

#include "bicol/foundation.hpp"
#include "bicol/random.hpp"

#include <complex>
#include <map>
#include <vector>

namespace bicol {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;
using Gram = std::vector<std::vector<double>>;

// Real loop with finitely many Fourier modes and no constant term. Only the modes
// k > 0 are stored; mode(−k) is the conjugate of mode(k).
class FourierLoop {
public:
  FourierLoop() = default;
  explicit FourierLoop(std::size_t dim, std::map<int, CVec> positive = {});
  // Error: InvalidArgument unless mode(−k) = conj(mode(k)) and there is no zero mode.
  static FourierLoop fromModes(std::size_t dim, const std::map<int, CVec>& modes);

  std::size_t dim() const { return dim_; }
  const std::map<int, CVec>& positiveModes() const { return modes_; }
  CVec mode(int k) const;
  bool isZero() const;

  FourierLoop operator+(const FourierLoop& o) const;
  FourierLoop operator-() const { return scaled(-1.0); }
  FourierLoop operator-(const FourierLoop& o) const { return *this + (-o); }
  FourierLoop scaled(double s) const;
  // Scalar multiplication in the complex structure J: (a + bJ)ξ.
  FourierLoop complexScaled(Complex c) const;
  // θ ↦ ξ(θ − t).
  FourierLoop rotated(double t) const;

private:
  std::size_t dim_ = 0;
  std::map<int, CVec> modes_;
};

// πi Σ_k k ⟨ξ_k, η_{−k}⟩_G; real for real loops.
double fourierS(const FourierLoop& xi, const FourierLoop& eta, const Gram& gram);
// The same pairing, complex bilinear, on loops in the complexification (all modes given).
Complex fourierSBilinear(const std::map<int, CVec>& xi, const std::map<int, CVec>& eta,
                         const Gram& gram);
FourierLoop applyJ(const FourierLoop& xi);
// 2π(S(ξ,Jη) − iS(ξ,η)): linear in ξ, conjugate-linear in η.
Complex innerJ(const FourierLoop& xi, const FourierLoop& eta, const Gram& gram);

Gram toDouble(const RatMatrix& g);
Gram identityGram(std::size_t d);

// Orthonormal frame of a finite set of loops inside V_J (Gram–Schmidt in innerJ).
class Frame {
public:
  Frame(const std::vector<FourierLoop>& loops, Gram gram, double tol = 1e-12);
  std::size_t size() const { return basis_.size(); }
  const Gram& gram() const { return gram_; }
  // Coordinates of a loop lying in the span.
  CVec coords(const FourierLoop& xi) const;

private:
  Gram gram_;
  std::vector<FourierLoop> basis_;
};

// Truncated Sym*(C^n); keys are weakly decreasing basis indices.
using Monomial = std::vector<int>;

class FockVector {
public:
  FockVector(std::size_t n, int cap) : n_(n), cap_(cap) {}
  static FockVector vacuum(std::size_t n, int cap);
  // Product v_1 ⋯ v_k of vectors given in frame coordinates.
  static FockVector product(const std::vector<CVec>& vs, int cap);

  std::size_t frameSize() const { return n_; }
  int cap() const { return cap_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }
  void addTerm(const Monomial& m, Complex c);
  FockVector operator+(const FockVector& o) const;
  FockVector scaled(Complex c) const;

private:
  std::size_t n_;
  int cap_;
  std::map<Monomial, Complex> terms_;
};

// Degreewise permanent pairing. Error: DegreeCapMismatch.
Complex fockInner(const FockVector& u, const FockVector& v);
// Permanent of a square complex matrix (Ryser).
Complex permanent(const std::vector<CVec>& m);
// Σ_{σ ∈ S_k} Π ⟨v_i, w_σ(i)⟩ for vectors in frame coordinates.
Complex symmetricPairing(const std::vector<CVec>& vs, const std::vector<CVec>& ws);

FockVector coherent(const CVec& xi, int cap);
Complex coherentInner(const CVec& xi, const CVec& eta, int cap);
// |x|^{K+1} e^{|x|} / (K+1)!
double coherentTailBound(double absInner, int cap);

// Finite linear combination Σ c_j e^{κ_j}.
struct CoherentSum {
  std::vector<std::pair<Complex, CVec>> terms;
  FockVector toFock(std::size_t n, int cap) const;
};

// W(ξ,z) e^κ = z e^{−½⟨ξ,ξ⟩ − ⟨κ,ξ⟩} e^{κ+ξ}.
CoherentSum weylApply(const CVec& xi, Complex z, const CoherentSum& v);

struct HeisenbergElement {
  FourierLoop xi;
  Complex z;
};
HeisenbergElement heisenbergMultiply(const HeisenbergElement& a, const HeisenbergElement& b, const Gram& gram);

// Number of Fock basis monomials of energy k, 0 ≤ k ≤ K, for d colours.
std::vector<Int> energyDims(int d, int order);

FourierLoop randomFourierLoop(Rng& rng, std::size_t dim, int maxMode, double maxNormJ, const Gram& gram);

} // namespace bicol
