#include "bicol/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace bicol;

namespace {

struct Inputs {
  std::string builtin, span, file, spanFile;
};

enum class Want { Lattice, Span, Either };

void addInputs(CLI::App* cmd, Inputs& in, Want want) {
  if (want == Want::Span) {
    cmd->add_option("--builtin,--span", in.span, "builtin span: identity:<lattice>, rank1-72, d8pair");
    cmd->add_option("--file", in.spanFile, "span JSON file");
    return;
  }
  cmd->add_option("--builtin", in.builtin, "builtin lattice, e.g. A2, D8, E8, U, Z2");
  cmd->add_option("--file", in.file, "lattice JSON file");
  if (want == Want::Either) {
    cmd->add_option("--span", in.span, "builtin span");
    cmd->add_option("--span-file", in.spanFile, "span JSON file");
  }
}

struct Resolved {
  std::string name;
  std::optional<Lattice> lattice;
  std::optional<LatticeSpan> span;
};

Resolved resolve(const Inputs& in) {
  int given = !in.builtin.empty() + !in.span.empty() + !in.file.empty() + !in.spanFile.empty();
  if (given != 1) fail(Errc::InvalidArgument, "give exactly one input: a builtin name or a file");
  if (!in.builtin.empty()) return {in.builtin, builtinByName(in.builtin), std::nullopt};
  if (!in.file.empty()) {
    Lattice l = parseLatticeFile(readFile(in.file));
    return {l.name().value_or(in.file), l, std::nullopt};
  }
  if (!in.span.empty()) return {in.span, std::nullopt, builtinSpan(in.span)};
  LatticeSpan s = parseSpanFile(readFile(in.spanFile));
  return {s.name().value_or(in.spanFile), std::nullopt, s};
}

Json factorsJson(const FiniteAbelianPresentation& p) { return toJson(p.invariantFactors()); }

Json latticeInfo(const Lattice& l, const std::string& name) {
  Json j;
  j["rank"] = l.rank();
  j["even"] = l.even();
  j["disc"] = l.disc().get_str() == "0" ? Json(0) : Json(l.disc().get_si());
  if (l.positiveDefinite())
    j["roots"] = shortVectors(l, Rat(l.even() ? 2 : 1)).size();
  else
    j["roots"] = nullptr;
  j["name"] = l.name().value_or(name);
  j["definiteness"] = definitenessName(l.definiteness());
  j["det"] = l.det().get_si();
  j["discriminantGroup"] = factorsJson(discriminantGroup(l));
  j["gram"] = toJson(l.gram());
  return j;
}

Json spanInfo(const LatticeSpan& s, const std::string& name) {
  const SpanDerived& d = s.derived();
  Json j;
  j["name"] = s.name().value_or(name);
  j["rank"] = s.rank();
  j["level"] = d.level.get_si();
  j["intersectionModGamma"] = factorsJson(d.intersectionModGamma);
  j["dualModSum"] = factorsJson(d.dualModSum);
  Int count = d.intersectionModGamma.order() * d.dualModSum.order();
  j["classCount"] = count.get_si();
  j["gamma"] = toJson(s.gamma().gram());
  j["white"] = toJson(s.white().gram());
  j["black"] = toJson(s.black().gram());
  j["embedW"] = toJson(s.embedW());
  j["embedB"] = toJson(s.embedB());
  j["intersectionBasis"] = toJson(d.intersection.basis());
  j["sumBasis"] = toJson(d.sum.basis());
  j["epsilon"] = toJson(d.epsilon);
  return j;
}

RatVec parseVector(const std::string& text, std::size_t n) {
  RatVec v;
  if (text.empty()) return RatVec(n);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parseRat(item));
  if (v.size() != n) fail(Errc::InvalidArgument, "vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
  return v;
}

IntVec parseIntVector(const std::string& text, std::size_t n) {
  RatVec r = parseVector(text, n);
  if (!isIntegral(r)) fail(Errc::InvalidArgument, "expected integers");
  return toInt(r);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices, spans, bicoloured loop groups and their representations"};
  app.require_subcommand(1);
  bool json = true;
  app.add_flag("--json", json, "structured JSON output (always on)");

  Inputs in;
  std::string maxNorm = "4", translate, label, chi, kind;
  int order = 3;
  long samples = 1000;
  std::uint64_t seed = 1;
  FockCheckParams fp;

  int exitCode = 0;
  std::function<Json()> action;

  auto* lattice = app.add_subcommand("lattice", "lattice data")->require_subcommand(1);
  auto* lInfo = lattice->add_subcommand("info", "rank, parity, discriminant, roots");
  addInputs(lInfo, in, Want::Lattice);
  lInfo->callback([&] {
    action = [&] {
      Resolved r = resolve(in);
      return latticeInfo(*r.lattice, r.name);
    };
  });
  auto* lTheta = lattice->add_subcommand("theta", "theta series of a coset up to a norm bound");
  addInputs(lTheta, in, Want::Lattice);
  lTheta->add_option("--max-norm", maxNorm, "largest norm <λ,λ> counted (p/q)");
  lTheta->add_option("--translate", translate, "comma separated rational translate");
  lTheta->callback([&] {
    action = [&] {
      Resolved r = resolve(in);
      RatVec t = parseVector(translate, r.lattice->rank());
      return toJson(thetaSeries(wholeLattice(*r.lattice), t, parseRat(maxNorm) / 2));
    };
  });
  auto* lOver = lattice->add_subcommand("overlattices", "overlattices from isotropic subgroups");
  addInputs(lOver, in, Want::Lattice);
  lOver->add_option("--kind", kind, "q (even overlattices, default for even lattices) or b");
  lOver->callback([&] {
    action = [&] {
      Resolved r = resolve(in);
      const Lattice& l = *r.lattice;
      std::string k = kind.empty() ? (l.even() ? "q" : "b") : kind;
      if (k != "q" && k != "b") fail(Errc::InvalidArgument, "kind must be q or b");
      Json out = Json::array();
      for (const DiscSubgroup& u : isotropicSubgroups(l, k == "q" ? IsoKind::Q : IsoKind::B)) {
        Overlattice o = overlatticeFromIsotropic(l, u);
        Json gens = Json::array();
        for (const IntVec& g : u.generators()) gens.push_back(toJson(g));
        out.push_back({{"generators", gens},
                       {"order", u.order().get_si()},
                       {"evenOverlattice", o.even},
                       {"gram", toJson(o.lattice.gram())}});
      }
      return out;
    };
  });

  auto* span = app.add_subcommand("span", "spans of lattices")->require_subcommand(1);
  auto* sInfo = span->add_subcommand("info", "derived lattices, level and quotient groups");
  addInputs(sInfo, in, Want::Span);
  sInfo->callback([&] {
    action = [&] {
      Resolved r = resolve(in);
      return spanInfo(*r.span, r.name);
    };
  });

  auto* reps = app.add_subcommand("reps", "positive energy representations")->require_subcommand(1);
  auto* rClassify = reps->add_subcommand("classify", "isomorphism classes of irreducibles");
  addInputs(rClassify, in, Want::Either);
  rClassify->callback([&] {
    action = [&] {
      Resolved r = resolve(in);
      Json labels = Json::array();
      Json j;
      if (r.lattice) {
        for (const auto& lb : classifyUnicoloured(*r.lattice)) labels.push_back({{"l", toJson(lb.l)}, {"m", lb.m}});
        j["kind"] = "unicoloured";
      } else {
        for (const auto& lb : classifyBicoloured(*r.span))
          labels.push_back({{"l", toJson(lb.l)}, {"chi", toJson(lb.chi)}, {"m", lb.m}});
        j["kind"] = "bicoloured";
      }
      j["count"] = labels.size();
      j["labels"] = labels;
      return j;
    };
  });
  auto* rChar = reps->add_subcommand("character", "graded character of the representation with label l");
  addInputs(rChar, in, Want::Either);
  rChar->add_option("--label", label, "comma separated rational label l (default 0)");
  rChar->add_option("--chi", chi, "comma separated character exponents (bicoloured; ignored by the character)");
  rChar->add_option("--order", order, "truncation order K");
  rChar->callback([&] {
    action = [&] {
      Resolved r = resolve(in);
      if (order < 0) fail(Errc::InvalidArgument, "order must be nonnegative");
      if (r.lattice) return toJson(characterUnicoloured(*r.lattice, parseVector(label, r.lattice->rank()), order));
      BicolouredLabel lb = makeLabel(*r.span, parseIntVector(chi, r.span->derived().intersectionModGamma.ngens()),
                                     parseVector(label, r.span->rank()));
      return toJson(characterBicoloured(*r.span, lb.l, order));
    };
  });

  auto* verify = app.add_subcommand("verify", "seeded identity suites")->require_subcommand(1);
  verify->footer(R"(Suites and the invariants they check:
  cocycle     c(f,g)+c(fg,h) = c(f,gh)+c(g,h), c(1,g) = 0, independence of lifts,
              winding additivity; bicoloured cocycle and the bicoloured-fashion form
  commutator  commutator closed forms (unicoloured and bicoloured), identity
              component witness <lambda, integral of eta>
  disjoint    disjointly supported loops commute; arcs through p and q included
  graded      odd lattices: commutator of disjoint loops is 1/2 p(gamma)p(rho)
  diffaction  d(phi,g) cochain laws: composition, cocycle compatibility, rotations,
              local triviality; bicoloured period condition
  autaction   automorphism action: coboundary relation, multiplicativity,
              commutes with reparametrization, non-isometries rejected
  bicoloured  Pth, Delta, Delta' and Bi are homomorphisms; Bi respects cocycles and
              reparametrizations; white/black embeddings; identity-span reductions
  pth         kernel of Pth is the intersection modulo the base lattice; Pth onto
              paths with winding in the sum lattice
Lattice targets run bicoloured suites on their identity span.
Exit codes: 0 pass, 1 parse or validation error, 2 counterexample.)");
  for (const std::string& name : suiteNames()) {
    auto* v = verify->add_subcommand(name, "run the " + name + " suite");
    addInputs(v, in, Want::Either);
    v->add_option("--samples", samples, "number of seeded samples");
    v->add_option("--seed", seed, "base seed");
    v->callback([&, name] {
      action = [&, name] {
        Resolved r = resolve(in);
        Target t{r.name, r.lattice, r.span};
        Report rep = runSuite(name, t, samples, seed);
        if (!rep.pass()) exitCode = 2;
        return rep.toJson();
      };
    });
  }

  auto* fock = app.add_subcommand("fock", "Fock space numerics")->require_subcommand(1);
  auto* fCheck = fock->add_subcommand("check", "coherent vectors, Weyl operators, Heisenberg law");
  fCheck->add_option("--dim", fp.dim, "largest loop dimension (1 to 4)");
  fCheck->add_option("--degree", fp.degree, "Fock degree cap K");
  fCheck->add_option("--modes", fp.modes, "largest Fourier mode");
  fCheck->add_option("--samples", fp.samples, "number of samples");
  fCheck->add_option("--seed", fp.seed, "base seed");
  fCheck->add_option("--tol", fp.tol, "tolerance on top of truncation bounds");
  fCheck->callback([&] {
    action = [&] {
      Report rep = fockCheck(fp);
      if (!rep.pass()) exitCode = 2;
      return rep.toJson();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    emit(action());
  } catch (const Error& e) {
    std::cerr << "bicol: " << e.what() << "\n";
    emit({{"status", "error"}, {"error", errcName(e.code())}, {"message", e.what()}});
    return 1;
  }
  return exitCode;
}
