// Acceptance run: one PASS/FAIL line per criterion.
#include "bicol/glue.hpp"
#include "bicol/reps.hpp"
#include "bicol/verify.hpp"
#include "helpers.hpp"

#include <fmt/core.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>

using namespace bicol;
using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && secs >= budget) o.need(false, fmt::format("took {:.2f} s, budget {:.0f} s", secs, budget));
  if (!o.ok) ++failures;
  fmt::print("{} {} {} ({:.2f} s){}\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.ok ? "" : ": " + o.detail);
  std::fflush(stdout);
}

const std::vector<std::string>& evenBuiltins() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4",
                                              "D5", "D6", "D7", "D8", "E6", "E7", "E8"};
  return names;
}

// θ of (offset + Z) with weight q^{x²/2}, on the grid 1/8 from exponent 0.
std::vector<Int> theta1(bool half, bool alternating, std::size_t len) {
  std::vector<Int> g(len, 0);
  for (long n = -20; n <= 20; ++n) {
    long twice = 2 * n + (half ? 1 : 0);
    auto e = static_cast<std::size_t>(twice * twice);
    if (e < len) g[e] += (alternating && n % 2 != 0) ? -1 : 1;
  }
  return g;
}

std::vector<Int> convolve(const std::vector<Int>& a, const std::vector<Int>& b, std::size_t len) {
  std::vector<Int> c(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<Int> power(const std::vector<Int>& g, int k, std::size_t len) {
  std::vector<Int> r(len, 0);
  r[0] = 1;
  for (int i = 0; i < k; ++i) r = convolve(r, g, len);
  return r;
}

// E8 = D8 ∪ (D8 + ½·1) in coordinates, times listed 8-coloured partitions.
std::vector<Int> e8VacuumOracle(int order) {
  const std::size_t len = 8 * static_cast<std::size_t>(order) + 1;
  std::vector<Int> whole = power(theta1(false, false, len), 8, len), alt = power(theta1(false, true, len), 8, len),
                   half = power(theta1(true, false, len), 8, len);
  std::vector<Int> theta(len), eta(len, 0);
  for (std::size_t i = 0; i < len; ++i) theta[i] = (whole[i] + alt[i]) / 2 + half[i] / 2;
  std::vector<Int> p = colouredPartitions(8, order);
  for (std::size_t k = 0; 8 * k < len; ++k) eta[8 * k] = p[k];
  std::vector<Int> full = convolve(theta, eta, len), out;
  for (std::size_t k = 0; k < len; k += 8) out.push_back(full[k]);
  return out;
}

std::string runCli(const std::string& args) {
  std::string cmd = std::string(BICOL_CLI) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return "popen failed";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  int status = pclose(f);
  return out + "\nstatus " + std::to_string(status);
}

} // namespace

int main() {
  criterion(1, "catalog arithmetic", 1, [](Outcome& o) {
    for (int n = 1; n <= 8; ++n) o.need(builtin("A", n).disc() == n + 1, fmt::format("disc A{}", n));
    o.need(discriminantGroup(builtin("D", 4)).invariantFactors() == std::vector<Int>{2, 2}, "D4 discriminant group");
    o.need(discriminantGroup(builtin("D", 5)).invariantFactors() == std::vector<Int>{4}, "D5 discriminant group");
    o.need(builtin("E6").disc() == 3 && builtin("E7").disc() == 2 && builtin("E8").disc() == 1, "E discriminants");
    for (int n = 1; n <= 8; ++n)
      o.need(Int(static_cast<long>(shortVectors(builtin("A", n), 2).size())) == n * (n + 1), fmt::format("roots A{}", n));
    for (int n = 4; n <= 8; ++n)
      o.need(Int(static_cast<long>(shortVectors(builtin("D", n), 2).size())) == 2 * n * (n - 1), fmt::format("roots D{}", n));
    o.need(shortVectors(builtin("E8"), 2).size() == 240, "roots E8");
  });

  criterion(2, "gluing", 5, [](Outcome& o) {
    Lattice d8 = builtin("D", 8);
    std::vector<DiscSubgroup> nontrivial;
    for (const DiscSubgroup& u : isotropicSubgroups(d8, IsoKind::Q))
      if (u.order() > 1) nontrivial.push_back(u);
    o.need(nontrivial.size() == 2, fmt::format("D8 has {} nontrivial isotropic subgroups", nontrivial.size()));
    for (const DiscSubgroup& u : nontrivial) {
      Overlattice ov = overlatticeFromIsotropic(d8, u);
      o.need(ov.even && ov.lattice.disc() == 1 && ov.lattice.rank() == 8, "D8 overlattice not even unimodular rank 8");
    }
    Lattice a2a2 = directSum(builtin("A", 2), builtin("A", 2));
    for (const Lattice& l : {builtin("D", 4), d8, a2a2}) {
      FiniteAbelianPresentation d = discriminantGroup(l);
      for (IsoKind kind : {IsoKind::Q, IsoKind::B})
        for (const DiscSubgroup& u : isotropicSubgroups(l, kind)) {
          Overlattice ov = overlatticeFromIsotropic(l, u);
          o.need(l.disc() == ov.lattice.disc() * u.order() * u.order(), "discriminant relation");
          o.need(subgroupOf(d, ov.sublattice) == u, "subgroup roundtrip");
        }
    }
  });

  criterion(3, "characters", 30, [](Outcome& o) {
    FracSeries c = characterUnicoloured(builtin("E8"), RatVec(8), 2);
    std::vector<Int> oracle = e8VacuumOracle(2);
    o.need(oracle == std::vector<Int>{1, 248, 4124}, "E8 oracle");
    for (int k = 0; k <= 2; ++k)
      o.need(c.coefficientAt(makeRat(k, 1) - q(1, 3)) == oracle[static_cast<std::size_t>(k)], fmt::format("E8 coefficient {}", k));

    const int order = 3;
    auto compare = [&](const FracSeries& sum, const FracSeries& chi, std::size_t rank, const std::string& what) {
      Rat limit = order - makeRat(static_cast<long>(rank), 24);
      for (std::size_t k = 0; k < chi.coeffs().size() && chi.exponent(k) <= limit; ++k)
        o.need(sum.coefficientAt(chi.exponent(k)) == chi.coeffs()[k], what);
    };
    for (const std::string& name : evenBuiltins()) {
      Lattice l = builtinByName(name);
      for (const UnicolouredLabel& lb : classifyUnicoloured(l))
        compare(sumHeads(restrictionDecomposition(l, lb, order, order), static_cast<int>(l.rank()), order),
                characterUnicoloured(l, lb.l, order), l.rank(), "restriction sum on " + name);
    }
    for (std::string name : {"rank1-72", "d8pair"}) {
      LatticeSpan s = builtinSpan(name);
      for (const BicolouredLabel& lb : classifyBicoloured(s))
        compare(sumHeads(restrictionDecomposition(s, lb, order, order), static_cast<int>(s.rank()), order),
                characterBicoloured(s, lb.l, order), s.rank(), std::string("restriction sum on ") + name);
    }
  });

  auto targets = [] {
    std::vector<Target> t;
    for (std::string n : {"A1", "A2", "D4", "E8"}) t.push_back(latticeTarget(builtinByName(n), n));
    for (std::string n : {"rank1-72", "d8pair"}) t.push_back(spanTarget(builtinSpan(n), n));
    return t;
  };

  criterion(4, "cocycle identity suites", 60, [&](Outcome& o) {
    for (const Target& t : targets())
      for (std::string suite : {"cocycle", "commutator", "diffaction", "bicoloured", "pth"}) {
        Report r = runSuite(suite, t, 1000, 1);
        o.need(r.pass(), suite + " on " + t.name + ": " + (r.counterexample ? r.counterexample->check : ""));
      }
  });

  criterion(5, "disjoint commutativity", 30, [&](Outcome& o) {
    std::vector<Target> ts;
    for (std::string n : {"A1", "A2", "D4"}) ts.push_back(latticeTarget(builtinByName(n), n));
    for (std::string n : {"identity:A1", "rank1-72", "d8pair"}) ts.push_back(spanTarget(builtinSpan(n), n));
    for (const Target& t : ts) {
      Report r = verifyDisjoint(t, 500, 1);
      o.need(r.pass(), "disjoint on " + t.name);
    }
    for (std::string n : {"Z1", "Z2"}) {
      Report r = verifyGraded(latticeTarget(builtinByName(n), n), 500, 1);
      o.need(r.pass(), "graded on " + n);
    }
  });

  criterion(6, "unicoloured reduction", 0, [](Outcome& o) {
    for (std::string n : {"A1", "A2", "D4"}) {
      LoopGroup u(builtinByName(n));
      BicolouredGroup g(builtinSpan("identity:" + n));
      Rng rng(6);
      for (int i = 0; i < 500; ++i) {
        PLPath a = randomLoop(rng, u), b = randomLoop(rng, u);
        BicolouredLoop ba = g.embed(Colour::H, a), bb = g.embed(Colour::H, b);
        o.need(g.cocycle(ba, bb) == u.cocycle(a, b), "cocycle on identity:" + n);
        PLReparam phi = randomReparam(rng, 1);
        o.need(g.reparamD(phi, ba) == u.reparamD(phi, a), "reparam on identity:" + n);
      }
    }
  });

  criterion(7, "classification", 0, [](Outcome& o) {
    const std::vector<std::pair<std::string, std::size_t>> uni{{"A1", 2}, {"A2", 3}, {"E8", 1}};
    for (const auto& [name, count] : uni) {
      Lattice l = builtinByName(name);
      auto labels = classifyUnicoloured(l);
      o.need(labels.size() == count, name + " count");
      Rng rng(7);
      // Random representatives of random classes; isomorphic exactly when the classes agree.
      auto draw = [&](std::size_t& cls) {
        cls = rng.below(labels.size());
        return conjugateShift(l, labels[cls], toRat(rng.intVec(l.rank(), -2, 2)));
      };
      for (int i = 0; i < 50; ++i) {
        std::size_t ca, cb, cc;
        UnicolouredLabel a = draw(ca), b = draw(cb), c = draw(cc);
        bool ab = isomorphicLabels(l, a, b), bc = isomorphicLabels(l, b, c), ac = isomorphicLabels(l, a, c);
        o.need(ab == (ca == cb) && ab == isomorphicLabels(l, b, a) && isomorphicLabels(l, a, a), name + " label pairs");
        o.need(!(ab && bc) || ac, name + " transitivity");
      }
    }
    const std::vector<std::pair<std::string, std::size_t>> bi{{"rank1-72", 12}, {"d8pair", 1}};
    for (const auto& [name, count] : bi) {
      LatticeSpan s = builtinSpan(name);
      auto labels = classifyBicoloured(s);
      o.need(labels.size() == count, name + " count");
      Rng rng(7);
      auto draw = [&](std::size_t& cls) {
        cls = rng.below(labels.size());
        return conjugateShift(s, labels[cls], s.derived().sum.fromCoords(toRat(rng.intVec(s.rank(), -2, 2))));
      };
      for (int i = 0; i < 50; ++i) {
        std::size_t ca, cb, cc;
        BicolouredLabel a = draw(ca), b = draw(cb), c = draw(cc);
        bool ab = isomorphicLabels(s, a, b), bc = isomorphicLabels(s, b, c), ac = isomorphicLabels(s, a, c);
        o.need(ab == (ca == cb) && ab == isomorphicLabels(s, b, a) && isomorphicLabels(s, a, a), name + " label pairs");
        o.need(!(ab && bc) || ac, name + " transitivity");
      }
    }
  });

  criterion(8, "Fock numerics", 10, [](Outcome& o) {
    FockCheckParams p;
    p.degree = 20;
    Report r = fockCheck(p);
    o.need(r.pass(), "fock check: " + (r.counterexample ? r.counterexample->check : ""));
    for (int d = 1; d <= 3; ++d)
      for (int k = 0; k <= 10; ++k) o.need(energyDims(d, k) == etaInversePower(d, k).coeffs(), "energy dimensions");
  });

  criterion(9, "determinism", 0, [](Outcome& o) {
    const std::vector<std::string> commands{
        "lattice info --builtin E8",
        "lattice theta --builtin A2 --max-norm 6",
        "lattice overlattices --builtin D8",
        "span info --span rank1-72",
        "reps classify --span rank1-72",
        "reps character --builtin A1 --label 1/2 --order 3",
        "verify cocycle --builtin D4 --samples 200 --seed 5",
        "verify disjoint --span d8pair --samples 100 --seed 5",
        "verify graded --builtin Z2 --samples 100 --seed 5",
        "verify pth --span rank1-72 --samples 100 --seed 5",
        "fock check --samples 10 --seed 5",
    };
    for (const std::string& c : commands) {
      std::string first = runCli(c), second = runCli(c);
      o.need(first == second, "output differs for: " + c);
      o.need(first.find("status 0") != std::string::npos, "nonzero exit for: " + c);
    }
  });

  return failures == 0 ? 0 : 1;
}
