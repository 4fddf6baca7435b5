#include "bicol/loops.hpp"

#include <algorithm>

namespace bicol {

namespace {

// a − b is a constant lattice vector.
bool differByLatticeConstant(const PLPath& a, const PLPath& b) {
  if (a.dim() != b.dim()) fail(Errc::Mismatch, "paths of different dimension");
  RatVec t = mergeBreakpoints(a.breakpoints(), b.breakpoints());
  std::vector<RatVec> va = a.sampleSorted(t), vb = b.sampleSorted(t);
  RatVec d0 = sub(va[0], vb[0]);
  if (!isIntegral(d0)) return false;
  Rat d;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t k = 0; k < d0.size(); ++k) {
      mpq_sub(d.get_mpq_t(), va[i][k].get_mpq_t(), vb[i][k].get_mpq_t());
      if (d != d0[k]) return false;
    }
  return true;
}

Angle half(const Rat& x) { return Angle(x / 2); }

// Commutator of the standard bi-additive cocycle: ½(⟨a,b⟩ + ⟨a,a⟩⟨b,b⟩).
Angle gradedCommutator(const RatMatrix& g, const RatVec& a, const RatVec& b) {
  return half(form(g, a, b) + form(g, a, a) * form(g, b, b));
}

IntervalSet pieceSupport(const PLPath& lift, const std::function<bool(const RatVec&)>& trivial, const Rat& lo,
                         const Rat& hi) {
  IntervalSet s;
  const RatVec& t = lift.breakpoints();
  const auto& v = lift.values();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] < lo || t[i + 1] > hi) continue;
    if (v[i] == v[i + 1] && trivial(v[i])) continue;
    s.push_back({t[i], t[i + 1]});
  }
  return s;
}

} // namespace

// ---------------------------------------------------------------------------

Angle Coboundary::ratio(const IntVec& lambda, const IntVec& mu) const {
  return Angle(form(r, toRat(lambda), toRat(mu)));
}

Angle Coboundary::e(const IntVec& lambda) const {
  Rat s = 0;
  std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i) {
    Int c = lambda[i] * (lambda[i] - 1) / 2;
    s += Rat(c) * r(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Int p = lambda[i] * lambda[j];
      s += Rat(p) * r(i, j);
    }
  }
  return Angle(s);
}

LoopGroup::LoopGroup(Lattice l) : lattice_(std::move(l)), epsilon_(standardEpsilon(lattice_)) {}

LoopGroup::LoopGroup(Lattice l, RatMatrix epsilon) : lattice_(std::move(l)), epsilon_(std::move(epsilon)) {
  if (epsilon_.rows() != lattice_.rank() || epsilon_.cols() != lattice_.rank())
    fail(Errc::InvalidArgument, "epsilon matrix has wrong shape");
}

PLPath LoopGroup::validate(const PLPath& lift) const {
  if (lift.dim() != rank()) fail(Errc::Mismatch, "loop dimension does not match the lattice rank");
  if (!isIntegral(lift.delta())) fail(Errc::NotInLattice, "winding element is not a lattice vector");
  return lift;
}

IntVec LoopGroup::winding(const PLPath& lift) const { return toInt(validate(lift).delta()); }

Decomposition LoopGroup::decompose(const PLPath& lift) const {
  IntVec w = winding(lift);
  RatVec d = toRat(w);
  std::vector<RatVec> v;
  for (std::size_t i = 0; i < lift.breakpoints().size(); ++i)
    v.push_back(sub(lift.values()[i], scale(lift.breakpoints()[i], d)));
  PLPath corrected(lift.breakpoints(), v);
  RatVec avg = corrected.integral();
  RatVec torus(avg.size());
  for (std::size_t i = 0; i < avg.size(); ++i) torus[i] = fracPart(avg[i]);
  return {torus, corrected.shifted(neg(avg)).simplified(), w};
}

PLPath LoopGroup::recompose(const Decomposition& d) const {
  return (PLPath::linear(RatVec(rank()), toRat(d.winding)) + d.vPart).shifted(d.torus);
}

Rat LoopGroup::bilinearS(const PLPath& xi, const PLPath& eta) const {
  const RatMatrix& g = lattice_.gramQ();
  return integralDerivPair(g, xi, eta) / 2 + form(g, xi.delta(), eta.front()) / 2;
}

Angle LoopGroup::epsilonOf(const IntVec& a, const IntVec& b) const {
  return epsilonAngle(epsilon_, toRat(a), toRat(b));
}

Angle LoopGroup::cocycle(const PLPath& gamma, const PLPath& rho) const {
  return epsilonOf(winding(gamma), winding(rho)) + Angle(bilinearS(gamma, rho));
}

CommutatorValues LoopGroup::commutator(const PLPath& gamma, const PLPath& rho) const {
  const RatMatrix& g = lattice_.gramQ();
  RatVec dg = toRat(winding(gamma)), dr = toRat(winding(rho));
  Rat closed = integralDerivPair(g, gamma, rho) - form(g, dr, dg) / 2 - form(g, dr, gamma.front());
  return {cocycle(gamma, rho) - cocycle(rho, gamma), gradedCommutator(g, dg, dr) + Angle(closed)};
}

bool LoopGroup::sameLoop(const PLPath& a, const PLPath& b) const { return differByLatticeConstant(a, b); }

bool LoopGroup::same(const Extended& a, const Extended& b) const {
  return a.phase == b.phase && sameLoop(a.loop, b.loop);
}

Extended LoopGroup::unit() const { return {PLPath::constant(RatVec(rank())), Angle::zero()}; }

Extended LoopGroup::multiply(const Extended& a, const Extended& b) const {
  return {(a.loop + b.loop).simplified(), a.phase + b.phase + cocycle(a.loop, b.loop)};
}

Extended LoopGroup::inverse(const Extended& a) const {
  PLPath m = -a.loop;
  return {m, -a.phase - cocycle(a.loop, m)};
}

IntervalSet LoopGroup::support(const PLPath& lift) const {
  return mergeIntervals(pieceSupport(lift, [](const RatVec& v) { return isIntegral(v); }, 0, 1));
}

Angle LoopGroup::reparamD(const PLReparam& phi, const PLPath& gamma) const {
  RatVec d = toRat(winding(gamma));
  RatVec diff = sub(gamma.extended(phi.inverse(0)), gamma.front());
  return half(form(lattice_.gramQ(), diff, d));
}

Extended LoopGroup::act(const PLReparam& phi, const Extended& x) const {
  return {pushforward(phi, x.loop), x.phase + reparamD(phi, x.loop)};
}

Angle LoopGroup::localTrivialityCheck(const PLReparam& phi, const PLPath& gamma) const {
  if (circleIntersects(phi.support(), support(gamma)))
    fail(Errc::SupportOverlap, "reparametrization and loop supports overlap");
  Extended moved = act(phi, {gamma, Angle::zero()});
  if (!sameLoop(moved.loop, gamma)) fail(Errc::Mismatch, "loop moved by a reparametrization away from its support");
  return moved.phase;
}

int LoopGroup::parity(const PLPath& gamma) const {
  RatVec d = toRat(winding(gamma));
  Int n = form(lattice_.gramQ(), d, d).get_num();
  return n % 2 == 0 ? 0 : 1;
}

Coboundary LoopGroup::solveCoboundary(const IntMatrix& g) const {
  std::size_t n = rank();
  if (g.rows() != n || g.cols() != n) fail(Errc::NotIsometry, "automorphism has wrong shape");
  if (g.transpose() * lattice_.gram() * g != lattice_.gram()) fail(Errc::NotIsometry, "matrix does not preserve the form");
  RatMatrix gq = toRat(g);
  return {g, gq.transpose() * epsilon_ * gq - epsilon_};
}

Extended LoopGroup::autAction(const Coboundary& c, const Extended& x) const {
  return {x.loop.mapped(toRat(c.g)), x.phase + c.e(winding(x.loop))};
}

// ---------------------------------------------------------------------------

BicolouredGroup::BicolouredGroup(LatticeSpan span) : span_(std::move(span)) {}

BicolouredLoop BicolouredGroup::make(const PLPath& lift, const RatVec& mq) const {
  const SpanDerived& d = derived();
  if (lift.dim() != rank() || mq.size() != rank()) fail(Errc::Mismatch, "bicoloured loop dimension mismatch");
  if (!d.sum.contains(lift.delta())) fail(Errc::WindingNotInSum, "winding is not in the sum lattice");
  if (!d.preW.contains(sub(lift.back(), mq))) fail(Errc::EndpointMismatch, "white endpoint does not glue at q");
  if (!d.preB.contains(sub(lift.front(), mq))) fail(Errc::EndpointMismatch, "black endpoint does not glue at q");
  return {lift, mq};
}

ClassPair BicolouredGroup::deltaClass(const BicolouredLoop& g) const {
  RatVec w = toRat(span_.embedW()) * sub(g.lift.back(), g.mq);
  RatVec b = toRat(span_.embedB()) * sub(g.lift.front(), g.mq);
  return canonicalClass(span_, {toInt(w), toInt(b)});
}

BicolouredLoop BicolouredGroup::standardLoop(const ClassPair& c) const {
  ClassPair k = canonicalClass(span_, c);
  const SpanDerived& d = derived();
  RatVec w = d.embedWInv * toRat(k.white);
  RatVec b = d.embedBInv * toRat(k.black);
  return make(PLPath::linear(b, w), RatVec(rank()));
}

BicolouredLoop BicolouredGroup::embed(Colour which, const PLPath& lift) const {
  const SpanDerived& d = derived();
  if (lift.dim() != rank()) fail(Errc::Mismatch, "loop dimension does not match the lattice rank");
  if (!isIntegral(lift.delta())) fail(Errc::NotInLattice, "winding element is not a lattice vector");
  if (which == Colour::H) return make(lift, lift.front());
  const Rat halfPt(1, 2);
  bool white = which == Colour::White;
  auto integral = [](const RatVec& v) { return isIntegral(v); };
  for (const auto& iv : mergeIntervals(pieceSupport(lift, integral, 0, 1))) {
    bool inside = white ? (iv.first >= halfPt) : (iv.second <= halfPt);
    if (!inside) fail(Errc::SupportViolation, white ? "white loop must be supported in [1/2,1]" : "black loop must be supported in [0,1/2]");
  }
  PLPath r = lift.withBreakpoint(halfPt);
  RatVec mid = r.at(halfPt);
  const RatMatrix& inv = white ? d.embedWInv : d.embedBInv;
  std::vector<RatVec> v;
  for (std::size_t i = 0; i < r.breakpoints().size(); ++i) {
    const Rat& t = r.breakpoints()[i];
    bool active = white ? t >= halfPt : t <= halfPt;
    v.push_back(active ? inv * sub(r.values()[i], mid) : RatVec(rank()));
  }
  return make(PLPath(r.breakpoints(), v).simplified(), RatVec(rank()));
}

BicolouredLoop BicolouredGroup::add(const BicolouredLoop& a, const BicolouredLoop& b) const {
  return {(a.lift + b.lift).simplified(), bicol::add(a.mq, b.mq)};
}

BicolouredLoop BicolouredGroup::negate(const BicolouredLoop& a) const { return {-a.lift, neg(a.mq)}; }

BicolouredLoop BicolouredGroup::zero() const { return {PLPath::constant(RatVec(rank())), RatVec(rank())}; }

bool BicolouredGroup::samePath(const PLPath& a, const PLPath& b) const { return differByLatticeConstant(a, b); }

bool BicolouredGroup::sameLoop(const BicolouredLoop& a, const BicolouredLoop& b) const {
  return samePath(a.lift, b.lift) && isIntegral(sub(a.mq, b.mq));
}

bool BicolouredGroup::same(const BicolExtended& a, const BicolExtended& b) const {
  return a.phase == b.phase && sameLoop(a.loop, b.loop);
}

Rat BicolouredGroup::bilinearS(const PLPath& xi, const PLPath& eta) const {
  const RatMatrix& g = span_.gamma().gramQ();
  return integralDerivPair(g, xi, eta) / 2 + form(g, xi.delta(), eta.front()) / 2;
}

Angle BicolouredGroup::cocycle(const BicolouredLoop& g, const BicolouredLoop& r) const {
  return epsilonAngle(derived().epsilon, deltaPrime(g), deltaPrime(r)) + Angle(bilinearS(g.lift, r.lift));
}

Angle BicolouredGroup::cocycleBicolouredFashion(const BicolouredLoop& g, const BicolouredLoop& r) const {
  const Rat halfPt(1, 2);
  RatMatrix ew = toRat(span_.embedW()), eb = toRat(span_.embedB());
  PLPath xw = g.lift.mapped(ew), yw = r.lift.mapped(ew);
  PLPath xb = g.lift.mapped(eb), yb = r.lift.mapped(eb);
  Rat white = integralDerivPair(span_.white().gramQ(), xw, yw, halfPt, 1);
  Rat black = integralDerivPair(span_.black().gramQ(), xb, yb, 0, halfPt);
  RatVec etaQ = derived().embedBInv * yb.front();
  Rat cross = form(span_.gamma().gramQ(), deltaPrime(g), etaQ);
  Rat s = (white + black + cross) / 2;
  return epsilonAngle(derived().epsilon, deltaPrime(g), deltaPrime(r)) + Angle(s);
}

CommutatorValues BicolouredGroup::commutator(const BicolouredLoop& g, const BicolouredLoop& r) const {
  const RatMatrix& gm = span_.gamma().gramQ();
  RatVec dg = deltaPrime(g), dr = deltaPrime(r);
  Rat closed = integralDerivPair(gm, g.lift, r.lift) - form(gm, dr, dg) / 2 - form(gm, dr, g.lift.front());
  return {cocycle(g, r) - cocycle(r, g), commutatorB(span_, dg, dr) + Angle(closed)};
}

BicolExtended BicolouredGroup::unit() const { return {zero(), Angle::zero()}; }

BicolExtended BicolouredGroup::multiply(const BicolExtended& a, const BicolExtended& b) const {
  return {add(a.loop, b.loop), a.phase + b.phase + cocycle(a.loop, b.loop)};
}

BicolExtended BicolouredGroup::inverse(const BicolExtended& a) const {
  BicolouredLoop m = negate(a.loop);
  return {m, -a.phase - cocycle(a.loop, m)};
}

IntervalSet BicolouredGroup::support(const BicolouredLoop& g) const {
  const Rat halfPt(1, 2);
  const SpanDerived& d = derived();
  PLPath lift = g.lift.withBreakpoint(halfPt);
  IntervalSet s = pieceSupport(lift, [&](const RatVec& v) { return d.preB.contains(v); }, 0, halfPt);
  IntervalSet w = pieceSupport(lift, [&](const RatVec& v) { return d.preW.contains(v); }, halfPt, 1);
  s.insert(s.end(), w.begin(), w.end());
  return mergeIntervals(s);
}

bool BicolouredGroup::isBicolouredInterval(const Rat& a, const Rat& b) {
  const Rat halfPt(1, 2);
  bool containsP, containsQ;
  if (a <= b) {
    containsP = a <= halfPt && halfPt <= b;
    containsQ = a == 0 || b == 1;
  } else {
    containsP = halfPt >= a || halfPt <= b;
    containsQ = true;
  }
  return !(containsP && containsQ);
}

Angle BicolouredGroup::reparamD(const PLReparam& phi, const BicolouredLoop& g) const {
  RatVec d = deltaPrime(g);
  RatVec diff = sub(g.lift.extended(phi.inverse(0)), g.lift.front());
  return half(form(span_.gamma().gramQ(), diff, d));
}

BicolouredLoop BicolouredGroup::pushforward(const PLReparam& phi, const BicolouredLoop& g) const {
  PLPath moved = bicol::pushforward(phi, g.lift);
  RatVec mq = bicol::add(sub(g.mq, g.lift.front()), moved.front());
  return {moved, mq};
}

BicolExtended BicolouredGroup::act(const PLReparam& phi, const BicolExtended& x) const {
  Int level = derived().level;
  if (Int(phi.period()) % level != 0)
    fail(Errc::PeriodMismatch, "reparametrization period must be a multiple of the span level " + level.get_str());
  return {pushforward(phi, x.loop), x.phase + reparamD(phi, x.loop)};
}

LoopGroup BicolouredGroup::whiteGroup() const {
  return LoopGroup(span_.white(), restrictEpsilon(derived().epsilon, derived().embedWInv));
}

LoopGroup BicolouredGroup::blackGroup() const {
  return LoopGroup(span_.black(), restrictEpsilon(derived().epsilon, derived().embedBInv));
}

LoopGroup BicolouredGroup::gammaGroup() const { return LoopGroup(span_.gamma(), derived().epsilon); }

// ---------------------------------------------------------------------------

namespace {

struct PathBuilder {
  RatVec t;
  std::vector<RatVec> v;
  void point(const Rat& x, const RatVec& val) {
    if (!t.empty() && t.back() == x) {
      v.back() = val;
      return;
    }
    t.push_back(x);
    v.push_back(val);
  }
  // Random PL segment on [a,b] from u to w (u placed at a, w at b).
  void segment(Rng& rng, const Rat& a, const Rat& b, const RatVec& u, const RatVec& w, const RandomLoopParams& p) {
    point(a, u);
    if (a < b) {
      int k = static_cast<int>(rng.range(0, p.maxPieces - 1));
      RatVec us = rng.sortedPoints(k, 0, 1, p.maxDen);
      for (const Rat& s : us) point(a + s * (b - a), rng.rationalVec(u.size(), -p.valueBound, p.valueBound, p.maxDen));
    }
    point(b, w);
  }
  void constant(const Rat& a, const Rat& b, const RatVec& u) {
    point(a, u);
    point(b, u);
  }
  PLPath build() const { return PLPath(t, v).simplified(); }
};

} // namespace

PLPath randomPath(Rng& rng, const RatVec& start, const RatVec& end, const RandomLoopParams& p) {
  PathBuilder b;
  b.segment(rng, 0, 1, start, end, p);
  return b.build();
}

PLPath randomLoop(Rng& rng, const LoopGroup& grp, const RandomLoopParams& p) {
  RatVec x0 = rng.rationalVec(grp.rank(), -p.valueBound, p.valueBound, p.maxDen);
  RatVec d = toRat(rng.intVec(grp.rank(), -p.windingBound, p.windingBound));
  return randomPath(rng, x0, add(x0, d), p);
}

PLPath randomLoopOnArc(Rng& rng, const LoopGroup& grp, const Rat& a, const Rat& b, const RandomLoopParams& p) {
  std::size_t n = grp.rank();
  RatVec d = toRat(rng.intVec(n, -p.windingBound, p.windingBound));
  RatVec l0 = toRat(rng.intVec(n, -2, 2));
  PathBuilder pb;
  if (a < b) {
    pb.constant(0, a, l0);
    pb.segment(rng, a, b, l0, add(l0, d), p);
    pb.constant(b, 1, add(l0, d));
  } else {
    RatVec x0 = rng.rationalVec(n, -p.valueBound, p.valueBound, p.maxDen);
    pb.segment(rng, 0, b, x0, l0, p);
    pb.constant(b, a, l0);
    pb.segment(rng, a, 1, l0, add(x0, d), p);
  }
  return pb.build();
}

RatVec randomVectorIn(Rng& rng, const RationalSublattice& s, long bound) {
  return s.fromCoords(toRat(rng.intVec(s.rank(), -bound, bound)));
}

namespace {

// Increasing values strictly between lo and hi at `count` points.
RatVec increasingBetween(Rng& rng, std::size_t count, const Rat& lo, const Rat& hi, long maxDen) {
  RatVec w;
  Rat total = 0;
  for (std::size_t i = 0; i <= count; ++i) {
    w.push_back(rng.rational(1, 12, maxDen));
    total += w.back();
  }
  RatVec out;
  Rat acc = 0;
  for (std::size_t i = 0; i < count; ++i) {
    acc += w[i];
    out.push_back(lo + (hi - lo) * acc / total);
  }
  return out;
}

} // namespace

PLReparam randomReparam(Rng& rng, long period, int maxPieces, long maxDen) {
  int k = static_cast<int>(rng.range(0, maxPieces - 1));
  RatVec t = rng.sortedPoints(k, 0, 1, maxDen);
  t.insert(t.begin(), Rat(0));
  t.push_back(1);
  Rat offset = rng.rational(-2, 2, maxDen);
  RatVec inner = increasingBetween(rng, k, offset, offset + 1, maxDen);
  RatVec v{offset};
  v.insert(v.end(), inner.begin(), inner.end());
  v.push_back(offset + 1);
  return PLReparam(t, v, period);
}

PLReparam randomReparamOnArc(Rng& rng, const Rat& a, const Rat& b, long period) {
  // Work on the lifted arc [a, e] with e = b or b + 1.
  Rat e = a < b ? b : b + 1;
  int k = static_cast<int>(rng.range(1, 3));
  RatVec us = rng.sortedPoints(k, 0, 1, 12);
  RatVec xs, ys;
  for (const Rat& u : us) xs.push_back(a + u * (e - a));
  ys = increasingBetween(rng, xs.size(), a, e, 12);
  auto arcMap = [&](const Rat& x) -> Rat {
    Rat px = a, py = a;
    for (std::size_t i = 0; i <= xs.size(); ++i) {
      Rat nx = i < xs.size() ? xs[i] : e, ny = i < ys.size() ? ys[i] : e;
      if (x <= nx) return py + (x - px) * (ny - py) / (nx - px);
      px = nx;
      py = ny;
    }
    return x;
  };
  auto phi = [&](const Rat& x) -> Rat {
    if (a < b) return (a <= x && x <= b) ? arcMap(x) : x;
    if (x >= a) return arcMap(x);
    if (x <= b) return arcMap(x + 1) - 1;
    return x;
  };
  RatVec t{0, 1, a, b};
  for (const Rat& x : xs) t.push_back(x >= 1 ? x - 1 : x);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  RatVec v;
  for (const Rat& x : t) v.push_back(phi(x));
  // Φ(1) must read Φ(0) + 1 even when the arc covers q.
  v.back() = v.front() + 1;
  return PLReparam(t, v, period);
}

BicolouredLoop randomBicoloured(Rng& rng, const BicolouredGroup& grp, const RandomLoopParams& p) {
  const SpanDerived& d = grp.derived();
  std::size_t n = grp.rank();
  RatVec mq = rng.rationalVec(n, -p.valueBound, p.valueBound, p.maxDen);
  RatVec w = randomVectorIn(rng, d.preW, p.windingBound);
  RatVec b = randomVectorIn(rng, d.preB, p.windingBound);
  PLPath lift = randomPath(rng, add(mq, b), add(mq, w), p);
  return grp.make(lift, mq);
}

BicolouredLoop randomBicolouredOnArc(Rng& rng, const BicolouredGroup& grp, const Rat& a, const Rat& b,
                                     const RandomLoopParams& p) {
  const SpanDerived& d = grp.derived();
  std::size_t n = grp.rank();
  const Rat halfPt(1, 2);
  if (!BicolouredGroup::isBicolouredInterval(a, b)) fail(Errc::InvalidArgument, "arc contains both p and q");
  PathBuilder pb;
  RatVec mq;
  if (a < b) {
    mq = randomVectorIn(rng, d.intersection, 2);
    RatVec v0 = randomVectorIn(rng, a <= halfPt ? d.preB : d.intersection, 2);
    RatVec v1 = randomVectorIn(rng, b >= halfPt ? d.preW : d.intersection, 2);
    pb.constant(0, a, v0);
    pb.segment(rng, a, b, v0, v1, p);
    pb.constant(b, 1, v1);
  } else {
    mq = rng.rationalVec(n, -p.valueBound, p.valueBound, p.maxDen);
    RatVec c = randomVectorIn(rng, d.intersection, 2);
    RatVec w = randomVectorIn(rng, d.preW, p.windingBound);
    RatVec bb = randomVectorIn(rng, d.preB, p.windingBound);
    pb.segment(rng, 0, b, add(mq, bb), c, p);
    pb.constant(b, a, c);
    pb.segment(rng, a, 1, c, add(mq, w), p);
  }
  return grp.make(pb.build(), mq);
}

ClassPair randomClass(Rng& rng, const BicolouredGroup& grp, long bound) {
  return {rng.intVec(grp.rank(), -bound, bound), rng.intVec(grp.rank(), -bound, bound)};
}

} // namespace bicol
