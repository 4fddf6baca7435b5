#pragma once

#include "bicol/fock.hpp"
#include "bicol/io.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace bicol {

struct Counterexample {
  std::string check;
  std::uint64_t sample = 0;
  std::uint64_t seed = 0; // seed of the failing sample's generator
  Json inputs;
  std::string expected, actual;
};

struct Report {
  std::string suite;
  std::string target;
  long samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, long> checks; // evaluations per named check
  std::optional<Counterexample> counterexample;
  Json payload = Json::object();

  bool pass() const { return !counterexample; }
  Json toJson() const;
};

// A lattice, or a span. Lattice targets run bicoloured suites on the identity span.
struct Target {
  std::string name;
  std::optional<Lattice> lattice;
  std::optional<LatticeSpan> span;
};

Target latticeTarget(const Lattice& l, const std::string& name);
Target spanTarget(const LatticeSpan& s, const std::string& name);

// Per-sample generator seed; independent of how samples are scheduled.
std::uint64_t sampleSeed(std::uint64_t seed, std::uint64_t index);

// One sample's checks. The first failing check is kept.
class Sample {
public:
  Sample(std::uint64_t seed, std::uint64_t index) : rng(sampleSeed(seed, index)), index_(index), seed_(sampleSeed(seed, index)) {}

  Rng rng;

  void check(const std::string& name, bool ok, const std::function<Json()>& inputs, const std::string& expected = "true",
             const std::string& actual = "false");
  void equal(const std::string& name, const Angle& expected, const Angle& actual, const std::function<Json()>& inputs);
  void equal(const std::string& name, const Rat& expected, const Rat& actual, const std::function<Json()>& inputs);

  const std::map<std::string, long>& counts() const { return counts_; }
  const std::optional<Counterexample>& failure() const { return failure_; }
  void recordException(const std::string& what);

private:
  std::uint64_t index_, seed_;
  std::map<std::string, long> counts_;
  std::optional<Counterexample> failure_;
};

// Runs body over samples in parallel; the failure with the lowest sample index wins.
Report runSamples(const std::string& suite, const Target& t, long samples, std::uint64_t seed,
                  const std::function<void(Sample&)>& body);

Report verifyCocycle(const Target& t, long samples, std::uint64_t seed);
Report verifyCommutator(const Target& t, long samples, std::uint64_t seed);
Report verifyDisjoint(const Target& t, long samples, std::uint64_t seed);
Report verifyGraded(const Target& t, long samples, std::uint64_t seed);
Report verifyDiffAction(const Target& t, long samples, std::uint64_t seed);
Report verifyAutAction(const Target& t, long samples, std::uint64_t seed);
Report verifyBicoloured(const Target& t, long samples, std::uint64_t seed);
Report verifyPth(const Target& t, long samples, std::uint64_t seed);

struct FockCheckParams {
  int dim = 2;
  int degree = 20;
  int modes = 6;
  long samples = 100;
  std::uint64_t seed = 1;
  double tol = 1e-8;
};

// Floating-point suite for the Fourier/Fock layer; payload holds worst deviations.
Report fockCheck(const FockCheckParams& p);

// Error: UnknownName.
Report runSuite(const std::string& suite, const Target& t, long samples, std::uint64_t seed);
const std::vector<std::string>& suiteNames();

} // namespace bicol
