#include "bicol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

namespace bicol {

Json Report::toJson() const {
  Json j;
  j["suite"] = suite;
  j["target"] = target;
  j["status"] = pass() ? "pass" : "fail";
  j["samples"] = samples;
  j["seed"] = seed;
  Json c = Json::object();
  for (const auto& [k, v] : checks) c[k] = v;
  j["checks"] = c;
  if (counterexample) {
    const Counterexample& x = *counterexample;
    j["counterexample"] = {{"check", x.check},       {"sample", x.sample},     {"seed", x.seed},
                           {"inputs", x.inputs},     {"expected", x.expected}, {"actual", x.actual}};
  }
  if (!payload.empty()) j["payload"] = payload;
  return j;
}

Target latticeTarget(const Lattice& l, const std::string& name) { return {name, l, std::nullopt}; }
Target spanTarget(const LatticeSpan& s, const std::string& name) { return {name, std::nullopt, s}; }

std::uint64_t sampleSeed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of the pair
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void Sample::check(const std::string& name, bool ok, const std::function<Json()>& inputs, const std::string& expected,
                   const std::string& actual) {
  ++counts_[name];
  if (ok || failure_) return;
  failure_ = Counterexample{name, index_, seed_, inputs ? inputs() : Json(), expected, actual};
}

void Sample::equal(const std::string& name, const Angle& expected, const Angle& actual,
                   const std::function<Json()>& inputs) {
  check(name, expected == actual, inputs, expected.str(), actual.str());
}

void Sample::equal(const std::string& name, const Rat& expected, const Rat& actual, const std::function<Json()>& inputs) {
  check(name, expected == actual, inputs, ratToString(expected), ratToString(actual));
}

void Sample::recordException(const std::string& what) {
  ++counts_["no exception"];
  if (!failure_) failure_ = Counterexample{"no exception", index_, seed_, Json(), "no error", what};
}

Report runSamples(const std::string& suite, const Target& t, long samples, std::uint64_t seed,
                  const std::function<void(Sample&)>& body) {
  if (samples < 0) fail(Errc::InvalidArgument, "sample count must be nonnegative");
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  workers = static_cast<unsigned>(std::min<long>(workers, std::max(1L, samples)));
  struct Partial {
    std::map<std::string, long> counts;
    std::optional<Counterexample> failure;
  };
  std::vector<Partial> parts(workers);
  auto work = [&](unsigned w) {
    Partial& p = parts[w];
    for (long i = w; i < samples; i += workers) {
      Sample s(seed, static_cast<std::uint64_t>(i));
      try {
        body(s);
      } catch (const std::exception& e) {
        s.recordException(e.what());
      }
      for (const auto& [k, v] : s.counts()) p.counts[k] += v;
      if (s.failure() && !p.failure) p.failure = s.failure();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& th : threads) th.join();

  Report r;
  r.suite = suite;
  r.target = t.name;
  r.samples = samples;
  r.seed = seed;
  for (const Partial& p : parts) {
    for (const auto& [k, v] : p.counts) r.checks[k] += v;
    if (p.failure && (!r.counterexample || p.failure->sample < r.counterexample->sample)) r.counterexample = p.failure;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

LatticeSpan spanOf(const Target& t) {
  if (t.span) return *t.span;
  const Lattice& l = *t.lattice;
  IntMatrix id = IntMatrix::identity(l.rank());
  return makeSpan(l, l, l, id, id, "identity:" + t.name);
}

const Lattice& latticeOf(const Target& t, const std::string& suite) {
  if (!t.lattice) fail(Errc::InvalidArgument, "suite '" + suite + "' needs a lattice target");
  return *t.lattice;
}

Json loops(std::initializer_list<PLPath> ps) {
  Json a = Json::array();
  for (const PLPath& p : ps) a.push_back(toJson(p));
  return a;
}

Json bloops(std::initializer_list<BicolouredLoop> ps) {
  Json a = Json::array();
  for (const BicolouredLoop& p : ps) a.push_back(toJson(p));
  return a;
}

// Two disjoint closed arcs from four sorted points; the second may wrap through 0.
std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>> disjointArcs(Rng& rng) {
  RatVec x = rng.sortedPoints(4, 0, 1, 12);
  if (rng.coin()) return {{x[0], x[1]}, {x[2], x[3]}};
  return {{x[1], x[2]}, {x[3], x[0]}};
}

// A bicoloured interval around p and another around q.
std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>> arcsAroundPQ(Rng& rng) {
  RatVec lo = rng.sortedPoints(2, 0, Rat(1, 2), 12), hi = rng.sortedPoints(2, Rat(1, 2), 1, 12);
  return {{lo[1], hi[0]}, {hi[1], lo[0]}};
}

PLPath gammaLambda(const IntVec& lambda) { return PLPath::linear(RatVec(lambda.size()), toRat(lambda)); }

std::vector<IntMatrix> sampleAutomorphisms(const Lattice& l, Rng& rng, const std::vector<VectorWithNorm>& roots) {
  std::size_t n = l.rank();
  IntMatrix id = IntMatrix::identity(n), minus(n, n);
  for (std::size_t i = 0; i < n; ++i) minus(i, i) = -1;
  std::vector<IntMatrix> out{id, minus};
  if (!roots.empty()) {
    // Products of up to three root reflections s_r(x) = x − ⟨x,r⟩ r.
    IntMatrix g = id;
    int k = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < k; ++i) {
      const RatVec& r = roots[rng.below(roots.size())].coords;
      RatVec gr = l.gramQ() * r;
      IntMatrix s = id;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Rat x = r[a] * gr[b];
          s(a, b) -= x.get_num();
        }
      g = g * s;
    }
    out.push_back(g);
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------

Report verifyCocycle(const Target& t, long samples, std::uint64_t seed) {
  if (t.lattice) {
    LoopGroup g(*t.lattice);
    return runSamples("cocycle", t, samples, seed, [&](Sample& s) {
      PLPath a = randomLoop(s.rng, g), b = randomLoop(s.rng, g), c = randomLoop(s.rng, g);
      auto in = [&] { return loops({a, b, c}); };
      s.equal("cocycle relation", g.cocycle(a, b) + g.cocycle(a + b, c), g.cocycle(a, b + c) + g.cocycle(b, c), in);
      PLPath zero = PLPath::constant(RatVec(g.rank()));
      s.equal("normalization", Angle::zero(), g.cocycle(a, zero), in);
      s.equal("normalization", Angle::zero(), g.cocycle(zero, a), in);
      RatVec v = toRat(s.rng.intVec(g.rank(), -3, 3));
      s.equal("lift independence", g.cocycle(a, b), g.cocycle(a.shifted(v), b), in);
      s.equal("lift independence", g.cocycle(a, b), g.cocycle(a, b.shifted(v)), in);
      Extended x{a, Angle(s.rng.rational(0, 1, 12))}, y{b, Angle::zero()}, z{c, Angle(s.rng.rational(0, 1, 12))};
      s.check("associativity", g.same(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z))), in);
      s.check("inverse", g.same(g.multiply(x, g.inverse(x)), g.unit()) && g.same(g.multiply(g.inverse(x), x), g.unit()), in);
      Extended central{zero, Angle(s.rng.rational(0, 1, 12))};
      s.check("central", g.same(g.multiply(central, x), g.multiply(x, central)), in);
      s.check("winding additive", g.winding(a + b) == toInt(add(toRat(g.winding(a)), toRat(g.winding(b)))), in);
      Decomposition d = g.decompose(a);
      s.check("decomposition", d.vPart.integral() == RatVec(g.rank()) && g.sameLoop(g.recompose(d), a), in);
    });
  }
  BicolouredGroup g(spanOf(t));
  return runSamples("cocycle", t, samples, seed, [&](Sample& s) {
    BicolouredLoop a = randomBicoloured(s.rng, g), b = randomBicoloured(s.rng, g), c = randomBicoloured(s.rng, g);
    auto in = [&] { return bloops({a, b, c}); };
    s.equal("cocycle relation", g.cocycle(a, b) + g.cocycle(g.add(a, b), c),
            g.cocycle(a, g.add(b, c)) + g.cocycle(b, c), in);
    s.equal("normalization", Angle::zero(), g.cocycle(a, g.zero()), in);
    s.equal("normalization", Angle::zero(), g.cocycle(g.zero(), a), in);
    RatVec v = randomVectorIn(s.rng, g.derived().gamma, 3);
    BicolouredLoop as{a.lift.shifted(v), add(a.mq, v)};
    s.equal("lift independence", g.cocycle(a, b), g.cocycle(as, b), in);
    s.equal("lift independence", g.cocycle(b, a), g.cocycle(b, as), in);
    s.equal("bicoloured fashion", g.cocycle(a, b), g.cocycleBicolouredFashion(a, b), in);
    BicolExtended x{a, Angle(s.rng.rational(0, 1, 12))}, y{b, Angle::zero()}, z{c, Angle(s.rng.rational(0, 1, 12))};
    s.check("associativity", g.same(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z))), in);
    s.check("inverse", g.same(g.multiply(x, g.inverse(x)), g.unit()) && g.same(g.multiply(g.inverse(x), x), g.unit()), in);
  });
}

Report verifyCommutator(const Target& t, long samples, std::uint64_t seed) {
  if (t.lattice) {
    LoopGroup g(*t.lattice);
    return runSamples("commutator", t, samples, seed, [&](Sample& s) {
      PLPath a = randomLoop(s.rng, g), b = randomLoop(s.rng, g);
      auto in = [&] { return loops({a, b}); };
      CommutatorValues c = g.commutator(a, b);
      s.equal("closed form", c.viaCocycle, c.closedForm, in);
      s.equal("self commutator", Angle::zero(), g.commutator(a, a).viaCocycle, in);
      Extended x{a, Angle::zero()}, y{b, Angle::zero()};
      Extended xy = g.multiply(x, y), yx = g.multiply(y, x);
      s.equal("group commutator", c.viaCocycle, xy.phase - yx.phase, in);
      // ρ in the identity component against γ_λ.
      IntVec lambda = s.rng.intVec(g.rank(), -3, 3);
      RatVec x0 = s.rng.rationalVec(g.rank(), -2, 2, 12);
      PLPath rho = randomPath(s.rng, x0, x0), gl = gammaLambda(lambda);
      auto in2 = [&] { return loops({rho, gl}); };
      Angle want(-g.lattice().pair(toRat(lambda), rho.integral()));
      s.equal("identity component witness", want, g.commutator(rho, gl).viaCocycle, in2);
    });
  }
  BicolouredGroup g(spanOf(t));
  return runSamples("commutator", t, samples, seed, [&](Sample& s) {
    BicolouredLoop a = randomBicoloured(s.rng, g), b = randomBicoloured(s.rng, g);
    auto in = [&] { return bloops({a, b}); };
    CommutatorValues c = g.commutator(a, b);
    s.equal("closed form", c.viaCocycle, c.closedForm, in);
    s.equal("self commutator", Angle::zero(), g.commutator(a, a).viaCocycle, in);
  });
}

Report verifyDisjoint(const Target& t, long samples, std::uint64_t seed) {
  if (t.lattice) {
    LoopGroup g(*t.lattice);
    return runSamples("disjoint", t, samples, seed, [&](Sample& s) {
      auto [i1, i2] = disjointArcs(s.rng);
      PLPath a = randomLoopOnArc(s.rng, g, i1.first, i1.second), b = randomLoopOnArc(s.rng, g, i2.first, i2.second);
      auto in = [&] { return loops({a, b}); };
      s.check("supports disjoint", !circleIntersects(g.support(a), g.support(b)), in);
      Angle want(makeRat(g.parity(a) * g.parity(b), 2));
      s.equal("disjoint commutativity", want, g.commutator(a, b).viaCocycle, in);
    });
  }
  BicolouredGroup g(spanOf(t));
  return runSamples("disjoint", t, samples, seed, [&](Sample& s) {
    auto run = [&](const std::string& name, std::pair<Rat, Rat> i1, std::pair<Rat, Rat> i2) {
      BicolouredLoop a = randomBicolouredOnArc(s.rng, g, i1.first, i1.second);
      BicolouredLoop b = randomBicolouredOnArc(s.rng, g, i2.first, i2.second);
      auto in = [&] { return bloops({a, b}); };
      s.check("supports disjoint", !circleIntersects(g.support(a), g.support(b)), in);
      s.equal(name, Angle::zero(), g.commutator(a, b).viaCocycle, in);
    };
    auto [i1, i2] = disjointArcs(s.rng);
    if (BicolouredGroup::isBicolouredInterval(i1.first, i1.second) &&
        BicolouredGroup::isBicolouredInterval(i2.first, i2.second))
      run("disjoint commutativity", i1, i2);
    auto [p, q] = arcsAroundPQ(s.rng);
    run("disjoint commutativity around p and q", p, q);
  });
}

Report verifyGraded(const Target& t, long samples, std::uint64_t seed) {
  const Lattice& l = latticeOf(t, "graded");
  LoopGroup g(l);
  return runSamples("graded", t, samples, seed, [&](Sample& s) {
    auto [i1, i2] = disjointArcs(s.rng);
    PLPath a = randomLoopOnArc(s.rng, g, i1.first, i1.second), b = randomLoopOnArc(s.rng, g, i2.first, i2.second);
    auto in = [&] { return loops({a, b}); };
    RatVec d = a.delta();
    s.check("parity", g.parity(a) == (floorOf(l.norm(d)) % 2 == 0 ? 0 : 1) && (l.even() ? g.parity(a) == 0 : true), in);
    Angle want(makeRat(g.parity(a) * g.parity(b), 2));
    CommutatorValues c = g.commutator(a, b);
    s.equal("graded commutativity", want, c.viaCocycle, in);
    s.equal("closed form", c.viaCocycle, c.closedForm, in);
  });
}

Report verifyDiffAction(const Target& t, long samples, std::uint64_t seed) {
  if (t.lattice) {
    if (!t.lattice->even()) fail(Errc::NotEven, "the reparametrization action needs an even lattice");
    LoopGroup g(*t.lattice);
    return runSamples("diffaction", t, samples, seed, [&](Sample& s) {
      PLPath a = randomLoop(s.rng, g), b = randomLoop(s.rng, g);
      PLReparam phi = randomReparam(s.rng, 1), psi = randomReparam(s.rng, 1);
      auto in = [&] { return Json{{"loops", loops({a, b})}, {"phi", toJson(phi)}, {"psi", toJson(psi)}}; };
      Angle lhs = g.reparamD(compose(psi, phi), a);
      Angle rhs = g.reparamD(psi, pushforward(phi, a)) + g.reparamD(phi, a);
      s.equal("composition law", lhs, rhs, in);
      s.check("composition of actions", g.sameLoop(pushforward(compose(psi, phi), a), pushforward(psi, pushforward(phi, a))), in);
      Angle l2 = g.reparamD(phi, a + b) + g.cocycle(a, b);
      Angle r2 = g.reparamD(phi, a) + g.reparamD(phi, b) + g.cocycle(pushforward(phi, a), pushforward(phi, b));
      s.equal("cocycle compatibility", l2, r2, in);
      Extended x{a, Angle::zero()}, y{b, Angle::zero()};
      s.check("action is multiplicative", g.same(g.act(phi, g.multiply(x, y)), g.multiply(g.act(phi, x), g.act(phi, y))), in);
      s.equal("identity", Angle::zero(), g.reparamD(PLReparam::identity(), a), in);
      PLPath z = randomPath(s.rng, a.front(), a.front());
      s.equal("zero winding", Angle::zero(), g.reparamD(phi, z), in);
      Rat theta = s.rng.rational(0, 1, 12);
      IntVec lambda = s.rng.intVec(g.rank(), -3, 3);
      RatVec lq = toRat(lambda);
      s.equal("rotation", Angle(-g.lattice().norm(lq) * theta / 2),
              g.reparamD(PLReparam::rotation(theta), gammaLambda(lambda)), in);
      auto [i1, i2] = disjointArcs(s.rng);
      PLPath c = randomLoopOnArc(s.rng, g, i1.first, i1.second);
      PLReparam r = randomReparamOnArc(s.rng, i2.first, i2.second, 1);
      auto in3 = [&] { return Json{{"loop", toJson(c)}, {"phi", toJson(r)}}; };
      s.equal("local triviality", Angle::zero(), g.localTrivialityCheck(r, c), in3);
    });
  }
  BicolouredGroup g(spanOf(t));
  long level = toLong(g.derived().level);
  return runSamples("diffaction", t, samples, seed, [&](Sample& s) {
    long period = level * s.rng.range(1, 2);
    BicolouredLoop a = randomBicoloured(s.rng, g), b = randomBicoloured(s.rng, g);
    PLReparam phi = randomReparam(s.rng, period), psi = randomReparam(s.rng, period);
    auto in = [&] { return Json{{"loops", bloops({a, b})}, {"phi", toJson(phi)}, {"psi", toJson(psi)}}; };
    Angle lhs = g.reparamD(compose(psi, phi), a);
    Angle rhs = g.reparamD(psi, g.pushforward(phi, a)) + g.reparamD(phi, a);
    s.equal("composition law", lhs, rhs, in);
    s.check("composition of actions",
            g.sameLoop(g.pushforward(compose(psi, phi), a), g.pushforward(psi, g.pushforward(phi, a))), in);
    Angle l2 = g.reparamD(phi, g.add(a, b)) + g.cocycle(a, b);
    Angle r2 = g.reparamD(phi, a) + g.reparamD(phi, b) + g.cocycle(g.pushforward(phi, a), g.pushforward(phi, b));
    s.equal("cocycle compatibility", l2, r2, in);
    BicolExtended x{a, Angle::zero()}, y{b, Angle::zero()};
    s.check("action is multiplicative", g.same(g.act(phi, g.multiply(x, y)), g.multiply(g.act(phi, x), g.act(phi, y))), in);
    BicolExtended moved = g.act(PLReparam::rotation(Rat(period), period), x);
    s.check("full shift", g.same(moved, x), in);
    BicolouredLoop st = g.standardLoop(randomClass(s.rng, g));
    BicolExtended sx{st, Angle::zero()};
    s.check("full shift on standard loop", g.same(g.act(PLReparam::rotation(Rat(period), period), sx), sx),
            [&] { return bloops({st}); });
    if (level > 1) {
      bool rejected = false;
      try {
        g.act(randomReparam(s.rng, level + 1), x);
      } catch (const Error& e) {
        rejected = e.code() == Errc::PeriodMismatch;
      }
      s.check("period mismatch rejected", rejected, in);
    }
    auto [i1, i2] = disjointArcs(s.rng);
    if (BicolouredGroup::isBicolouredInterval(i1.first, i1.second)) {
      BicolouredLoop c = randomBicolouredOnArc(s.rng, g, i1.first, i1.second);
      PLReparam r = randomReparamOnArc(s.rng, i2.first, i2.second, period);
      BicolExtended cx{c, Angle::zero()};
      s.check("local triviality", g.same(g.act(r, cx), cx),
              [&] { return Json{{"loop", toJson(c)}, {"phi", toJson(r)}}; });
    }
  });
}

Report verifyAutAction(const Target& t, long samples, std::uint64_t seed) {
  const Lattice& l = latticeOf(t, "autaction");
  if (!l.even()) fail(Errc::NotEven, "the automorphism action needs an even lattice");
  LoopGroup g(l);
  std::vector<VectorWithNorm> roots;
  if (l.positiveDefinite()) roots = shortVectors(l, 2);
  Report r = runSamples("autaction", t, samples, seed, [&](Sample& s) {
    for (const IntMatrix& m : sampleAutomorphisms(l, s.rng, roots)) {
      Coboundary c = g.solveCoboundary(m);
      IntVec lam = s.rng.intVec(g.rank(), -3, 3), mu = s.rng.intVec(g.rank(), -3, 3);
      IntVec sum = toInt(add(toRat(lam), toRat(mu)));
      auto inA = [&] { return Json{{"g", toJson(m)}, {"lambda", toJson(lam)}, {"mu", toJson(mu)}}; };
      s.equal("coboundary", c.ratio(lam, mu), c.e(sum) - c.e(lam) - c.e(mu), inA);
      Angle direct = g.epsilonOf(toInt(toRat(m) * toRat(lam)), toInt(toRat(m) * toRat(mu))) - g.epsilonOf(lam, mu);
      s.equal("cocycle ratio", direct, c.ratio(lam, mu), inA);
      PLPath a = randomLoop(s.rng, g), b = randomLoop(s.rng, g);
      PLReparam phi = randomReparam(s.rng, 1);
      auto in = [&] { return Json{{"g", toJson(m)}, {"loops", loops({a, b})}, {"phi", toJson(phi)}}; };
      Extended x{a, Angle(s.rng.rational(0, 1, 12))}, y{b, Angle::zero()};
      s.check("multiplicative", g.same(g.autAction(c, g.multiply(x, y)), g.multiply(g.autAction(c, x), g.autAction(c, y))), in);
      s.check("commutes with reparametrization", g.same(g.autAction(c, g.act(phi, x)), g.act(phi, g.autAction(c, x))), in);
    }
    IntMatrix twice = IntMatrix::identity(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) twice(i, i) = 2;
    bool rejected = false;
    try {
      g.solveCoboundary(twice);
    } catch (const Error& e) {
      rejected = e.code() == Errc::NotIsometry;
    }
    s.check("non-isometry rejected", rejected, nullptr);
  });
  r.payload["roots"] = roots.size();
  return r;
}

Report verifyBicoloured(const Target& t, long samples, std::uint64_t seed) {
  LatticeSpan span = spanOf(t);
  BicolouredGroup g(span);
  LoopGroup gamma = g.gammaGroup(), white = g.whiteGroup(), black = g.blackGroup();
  bool identity = span.embedW() == IntMatrix::identity(span.rank()) && span.embedB() == span.embedW();
  std::optional<LoopGroup> plain;
  if (identity) plain.emplace(span.gamma());
  long level = toLong(g.derived().level);
  const Rat half(1, 2);
  return runSamples("bicoloured", t, samples, seed, [&](Sample& s) {
    BicolouredLoop a = randomBicoloured(s.rng, g), b = randomBicoloured(s.rng, g);
    auto in = [&] { return bloops({a, b}); };
    BicolouredLoop ab = g.add(a, b);
    s.check("Pth homomorphism", g.pth(ab) == g.pth(a) + g.pth(b), in);
    s.check("delta prime homomorphism", g.deltaPrime(ab) == add(g.deltaPrime(a), g.deltaPrime(b)), in);
    ClassPair ca = g.deltaClass(a), cb = g.deltaClass(b);
    ClassPair csum{toInt(add(toRat(ca.white), toRat(cb.white))), toInt(add(toRat(ca.black), toRat(cb.black)))};
    s.check("delta homomorphism", sameClass(span, g.deltaClass(ab), csum), in);
    s.check("delta prime from delta", classToSum(span, ca) == g.deltaPrime(a), in);
    s.equal("bicoloured fashion", g.cocycle(a, b), g.cocycleBicolouredFashion(a, b), in);

    ClassPair c = randomClass(s.rng, g);
    BicolouredLoop st = g.standardLoop(c);
    auto inC = [&] { return Json{{"white", toJson(c.white)}, {"black", toJson(c.black)}}; };
    s.check("standard loop is a section", sameClass(span, g.deltaClass(st), c), inC);
    s.check("standard loop delta prime", g.deltaPrime(st) == classToSum(span, canonicalClass(span, c)), inC);

    BicolouredLoop k = g.add(a, g.negate(g.standardLoop(ca)));
    s.check("kernel of delta is the identity component", g.sameLoop(k, g.embed(Colour::H, k.lift)), in);

    PLPath p = randomLoop(s.rng, gamma), q = randomLoop(s.rng, gamma);
    auto inH = [&] { return loops({p, q}); };
    BicolouredLoop bp = g.embed(Colour::H, p), bq = g.embed(Colour::H, q);
    s.check("Pth of Bi is the inclusion", g.pth(bp) == p, inH);
    s.check("Bi homomorphism", g.sameLoop(g.embed(Colour::H, p + q), g.add(bp, bq)), inH);
    s.equal("Bi cocycle", gamma.cocycle(p, q), g.cocycle(bp, bq), inH);
    PLReparam phi = randomReparam(s.rng, level);
    BicolExtended moved = g.act(phi, {bp, Angle::zero()});
    BicolExtended viaBi{g.embed(Colour::H, pushforward(phi, p)), gamma.reparamD(phi, p)};
    s.check("Bi equivariance", g.same(moved, viaBi), [&] { return Json{{"loop", toJson(p)}, {"phi", toJson(phi)}}; });
    if (plain) {
      s.equal("identity span reduces to the unicoloured cocycle", plain->cocycle(p, q), g.cocycle(bp, bq), inH);
      PLReparam phi1 = randomReparam(s.rng, 1);
      BicolExtended m1 = g.act(phi1, {bp, Angle::zero()});
      s.equal("identity span reduces to the unicoloured action", plain->reparamD(phi1, p), m1.phase,
              [&] { return Json{{"loop", toJson(p)}, {"phi", toJson(phi1)}}; });
    }

    PLPath w1 = randomLoopOnArc(s.rng, white, half, 1), w2 = randomLoopOnArc(s.rng, white, half, 1);
    auto inW = [&] { return loops({w1, w2}); };
    BicolouredLoop ew1 = g.embed(Colour::White, w1), ew2 = g.embed(Colour::White, w2);
    s.equal("white embedding cocycle", white.cocycle(w1, w2), g.cocycle(ew1, ew2), inW);
    s.check("white embedding homomorphism", g.sameLoop(g.embed(Colour::White, w1 + w2), g.add(ew1, ew2)), inW);
    s.check("white embedding support", g.support(ew1) == white.support(w1), inW);
    PLPath b1 = randomLoopOnArc(s.rng, black, 0, half), b2 = randomLoopOnArc(s.rng, black, 0, half);
    auto inB = [&] { return loops({b1, b2}); };
    BicolouredLoop eb1 = g.embed(Colour::Black, b1), eb2 = g.embed(Colour::Black, b2);
    s.equal("black embedding cocycle", black.cocycle(b1, b2), g.cocycle(eb1, eb2), inB);
    s.check("black embedding homomorphism", g.sameLoop(g.embed(Colour::Black, b1 + b2), g.add(eb1, eb2)), inB);
    s.check("black embedding support", g.support(eb1) == black.support(b1), inB);
  });
}

Report verifyPth(const Target& t, long samples, std::uint64_t seed) {
  LatticeSpan span = spanOf(t);
  BicolouredGroup g(span);
  const SpanDerived& d = g.derived();
  Report r = runSamples("pth", t, samples, seed, [&](Sample& s) {
    RatVec nu = randomVectorIn(s.rng, d.intersection, 3);
    BicolouredLoop k = g.make(PLPath::constant(RatVec(g.rank())), nu);
    auto in = [&] { return bloops({k}); };
    s.check("kernel element has zero path", g.pth(k) == PLPath::constant(RatVec(g.rank())), in);
    s.check("kernel element trivial iff in base lattice", g.sameLoop(k, g.zero()) == d.gamma.contains(nu), in);
    // Any path with winding in the sum lifts.
    RatVec x0 = s.rng.rationalVec(g.rank(), -2, 2, 12);
    RatVec delta = randomVectorIn(s.rng, d.sum, 3);
    PLPath p = randomPath(s.rng, x0, add(x0, delta));
    SumDecomposition dec = decomposeSum(span, delta);
    BicolouredLoop lifted = g.make(p, sub(x0, dec.black));
    s.check("Pth surjective", g.pth(lifted) == p, [&] { return loops({p}); });
    BicolouredLoop a = randomBicoloured(s.rng, g), b = randomBicoloured(s.rng, g);
    s.check("Pth homomorphism", g.pth(g.add(a, b)) == g.pth(a) + g.pth(b), [&] { return bloops({a, b}); });
    BicolouredLoop diff = g.add(a, g.negate(g.make(a.lift, add(a.mq, nu))));
    s.check("same path differs by kernel", g.pth(diff) == PLPath::constant(RatVec(g.rank())), in);
  });
  Int kernel = d.intersectionModGamma.order();
  // Distinct kernel loops over the coset representatives.
  std::vector<IntVec> elems = d.intersectionModGamma.elements();
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    BicolouredLoop ki = g.make(PLPath::constant(RatVec(g.rank())), d.intersectionModGamma.lift(elems[i]));
    bool fresh = true;
    for (std::size_t j = 0; j < i && fresh; ++j) {
      BicolouredLoop kj = g.make(PLPath::constant(RatVec(g.rank())), d.intersectionModGamma.lift(elems[j]));
      fresh = !g.sameLoop(ki, kj);
    }
    distinct += fresh;
  }
  r.checks["kernel size"] = 1;
  r.payload["kernelOrder"] = kernel.get_si();
  r.payload["distinctKernelLoops"] = distinct;
  if (Int(static_cast<long>(distinct)) != kernel && !r.counterexample)
    r.counterexample = Counterexample{"kernel size", 0, seed, Json(), kernel.get_str(), std::to_string(distinct)};
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Json cvecJson(const CVec& v) {
  Json a = Json::array();
  for (const Complex& c : v) a.push_back({sci(c.real()), sci(c.imag())});
  return a;
}

Json fourierJson(const FourierLoop& xi) {
  Json m = Json::object();
  for (const auto& [k, v] : xi.positiveModes()) m[std::to_string(k)] = cvecJson(v);
  return m;
}

double maxDiff(const FockVector& a, const FockVector& b) {
  double worst = 0;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    worst = std::max(worst, std::abs(c - (it == b.terms().end() ? Complex(0) : it->second)));
  }
  for (const auto& [m, c] : b.terms())
    if (!a.terms().count(m)) worst = std::max(worst, std::abs(c));
  return worst;
}

} // namespace

Report fockCheck(const FockCheckParams& p) {
  if (p.dim < 1 || p.dim > 4) fail(Errc::InvalidArgument, "fock check supports dimensions 1 to 4");
  if (p.degree < 0 || p.modes < 1) fail(Errc::InvalidArgument, "degree must be nonnegative and modes positive");
  std::map<std::string, double> worst;
  Report r;
  r.suite = "fock";
  r.target = "dim " + std::to_string(p.dim);
  r.samples = p.samples;
  r.seed = p.seed;
  const double pi = std::acos(-1.0);
  const int K = p.degree;

  for (long i = 0; i < p.samples; ++i) {
    Sample s(p.seed, static_cast<std::uint64_t>(i));
    std::size_t d = static_cast<std::size_t>(s.rng.range(1, p.dim));
    Gram g = identityGram(d);
    FourierLoop xi = randomFourierLoop(s.rng, d, p.modes, 1.0, g);
    FourierLoop eta = randomFourierLoop(s.rng, d, p.modes, 1.0, g);
    FourierLoop kappa = randomFourierLoop(s.rng, d, p.modes, 1.0, g);
    double theta = s.rng.unit();
    auto in = [&] {
      return Json{{"xi", fourierJson(xi)}, {"eta", fourierJson(eta)}, {"kappa", fourierJson(kappa)}};
    };
    auto within = [&](const std::string& name, double dev, double bound) {
      worst[name] = std::max(worst[name], dev);
      s.check(name, dev <= bound, in, "<= " + sci(bound), sci(dev));
    };

    FourierLoop jj = applyJ(applyJ(xi));
    s.check("J squared", jj.positiveModes() == (-xi).positiveModes(), in);
    within("S skew", std::abs(fourierS(xi, eta, g) + fourierS(eta, xi, g)), 1e-12);
    within("innerJ hermitian", std::abs(innerJ(xi, eta, g) - std::conj(innerJ(eta, xi, g))), 1e-12);
    Complex self = innerJ(xi, xi, g);
    s.check("innerJ positive", self.real() > 0 && std::abs(self.imag()) <= 1e-12, in);
    within("rotation commutes with J",
           std::abs(innerJ(applyJ(xi.rotated(theta)) - applyJ(xi).rotated(theta),
                           applyJ(xi.rotated(theta)) - applyJ(xi).rotated(theta), g)),
           1e-12);
    std::map<int, CVec> plusA = xi.positiveModes(), plusB = eta.positiveModes();
    within("positive modes isotropic", std::abs(fourierSBilinear(plusA, plusB, g)), 1e-12);
    std::map<int, CVec> fullA, fullB;
    for (int k = -p.modes; k <= p.modes; ++k)
      if (k != 0) {
        fullA[k] = xi.mode(k);
        fullB[k] = eta.mode(k);
      }
    within("bilinear form restricts to S", std::abs(fourierSBilinear(fullA, fullB, g) - fourierS(xi, eta, g)), 1e-12);

    FourierLoop kappaBack = kappa.rotated(-theta);
    // Fock computations stay inside span{ξ, η, κ}; the rotation check needs the larger frame.
    Frame frame({xi, eta, kappa}, g);
    Frame wide({xi, eta, kappa, xi.rotated(theta), kappaBack}, g);
    std::size_t n = frame.size();
    CVec cx = frame.coords(xi), ce = frame.coords(eta), ck = frame.coords(kappa);

    Complex ip = innerJ(xi, eta, g);
    within("coherent inner product", std::abs(coherentInner(cx, ce, K) - std::exp(ip)),
           p.tol + coherentTailBound(std::abs(ip), K));

    // Weyl operators preserve the Gram matrix of coherent probes.
    std::vector<CVec> probes{CVec(n), ck, ce};
    Complex z = std::polar(1.0, 2 * pi * s.rng.unit());
    std::vector<FockVector> moved;
    for (const CVec& pr : probes) moved.push_back(weylApply(cx, z, {{{1.0, pr}}}).toFock(n, K));
    for (std::size_t a = 0; a < probes.size(); ++a)
      for (std::size_t b = 0; b < probes.size(); ++b) {
        const FockVector &u = moved[a], &v = moved[b];
        Complex before = coherentInner(probes[a], probes[b], K);
        double mag = 0;
        for (const CVec& w : {probes[a], probes[b]})
          for (const Complex& c : w) mag += std::norm(c);
        mag = std::sqrt(mag) + std::sqrt(std::abs(innerJ(xi, xi, g)));
        within("Weyl unitarity", std::abs(fockInner(u, v) - before), p.tol + 4 * coherentTailBound(mag * mag, K));
      }

    // W(ξ)W(η) = W(ξ+η, e^{−2πiS(ξ,η)}) on a coherent probe.
    CoherentSum probe{{{1.0, ck}}};
    CoherentSum lhs = weylApply(cx, 1, weylApply(ce, 1, probe));
    HeisenbergElement prod = heisenbergMultiply({xi, 1}, {eta, 1}, g);
    CoherentSum rhs = weylApply(frame.coords(prod.xi), prod.z, probe);
    within("Weyl composition", std::abs(lhs.terms[0].first - rhs.terms[0].first), p.tol);
    within("Weyl composition", maxDiff(lhs.toFock(n, K), rhs.toFock(n, K)), p.tol);
    HeisenbergElement inv = heisenbergMultiply({xi, 1}, {-xi, 1}, g);
    within("Heisenberg inverse", std::abs(inv.z - 1.0) + std::sqrt(std::abs(innerJ(inv.xi, inv.xi, g))), 1e-12);
    HeisenbergElement ab = heisenbergMultiply({xi, 1}, {eta, 1}, g), ba = heisenbergMultiply({eta, 1}, {xi, 1}, g);
    within("Heisenberg commutator", std::abs(ab.z / ba.z - std::polar(1.0, -4 * pi * fourierS(xi, eta, g))), 1e-12);
    HeisenbergElement l3 = heisenbergMultiply(heisenbergMultiply({xi, 1}, {eta, 1}, g), {kappa, 1}, g);
    HeisenbergElement r3 = heisenbergMultiply({xi, 1}, heisenbergMultiply({eta, 1}, {kappa, 1}, g), g);
    within("Heisenberg associativity", std::abs(l3.z - r3.z), 1e-12);

    // R W(ξ) R* e^κ = W(Rξ) e^κ.
    CoherentSum rotLhs = weylApply(wide.coords(xi), 1, {{{1.0, wide.coords(kappaBack)}}});
    CoherentSum rotRhs = weylApply(wide.coords(xi.rotated(theta)), 1, {{{1.0, wide.coords(kappa)}}});
    CVec target = wide.coords((kappaBack + xi).rotated(theta));
    double dv = 0;
    for (std::size_t a = 0; a < wide.size(); ++a) dv = std::max(dv, std::abs(target[a] - rotRhs.terms[0].second[a]));
    within("rotation intertwining", std::abs(rotLhs.terms[0].first - rotRhs.terms[0].first) + dv, p.tol);

    for (const auto& [k, v] : s.counts()) r.checks[k] += v;
    if (s.failure() && !r.counterexample) r.counterexample = s.failure();
  }

  // Exact checks.
  bool energyOk = true;
  for (int d = 1; d <= 3; ++d)
    for (int k = 0; k <= 10; ++k) energyOk = energyOk && energyDims(d, k) == etaInversePower(d, k).coeffs();
  r.checks["energy dimensions"] = 1;
  if (!energyOk && !r.counterexample)
    r.counterexample = Counterexample{"energy dimensions", 0, p.seed, Json(), "eta power coefficients", "mismatch"};
  CVec e1{1, 0}, e2{0, 1};
  std::vector<FockVector> deg2{FockVector::product({e1, e1}, 2), FockVector::product({e1, e2}, 2),
                               FockVector::product({e2, e2}, 2)};
  bool gramOk = true;
  const double want[3] = {2, 1, 2};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) gramOk = gramOk && std::abs(fockInner(deg2[a], deg2[b]) - (a == b ? want[a] : 0.0)) < 1e-15;
  r.checks["degree two Gram matrix"] = 1;
  if (!gramOk && !r.counterexample)
    r.counterexample = Counterexample{"degree two Gram matrix", 0, p.seed, Json(), "diag(2,1,2)", "mismatch"};

  Json w = Json::object();
  for (const auto& [k, v] : worst) w[k] = sci(v);
  r.payload["worstDeviation"] = w;
  r.payload["tol"] = sci(p.tol);
  r.payload["degree"] = K;
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"cocycle",   "commutator", "disjoint",   "graded",
                                              "diffaction", "autaction", "bicoloured", "pth"};
  return names;
}

Report runSuite(const std::string& suite, const Target& t, long samples, std::uint64_t seed) {
  if (suite == "cocycle") return verifyCocycle(t, samples, seed);
  if (suite == "commutator") return verifyCommutator(t, samples, seed);
  if (suite == "disjoint") return verifyDisjoint(t, samples, seed);
  if (suite == "graded") return verifyGraded(t, samples, seed);
  if (suite == "diffaction") return verifyDiffAction(t, samples, seed);
  if (suite == "autaction") return verifyAutAction(t, samples, seed);
  if (suite == "bicoloured") return verifyBicoloured(t, samples, seed);
  if (suite == "pth") return verifyPth(t, samples, seed);
  fail(Errc::UnknownName, "unknown verification suite '" + suite + "'");
}

} // namespace bicol
