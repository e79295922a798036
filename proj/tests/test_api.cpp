#include "doctest.h"

#include "effectus/api.hpp"
#include "effectus/generators.hpp"
#include "effectus/rng.hpp"

using namespace effectus;

namespace {

Rational01 r(int n, int d) { return Rational01(n, d); }

KernelMap probRow(int cod, std::vector<std::pair<int, Rational01>> w) {
  KernelMap f{1, cod, {SubDist{}}};
  for (auto& [i, v] : w) f.rows[0].set(i, v);
  return f;
}

}  // namespace

TEST_CASE("kernel-supplement across the instances") {
  // Boolean: the domain of definition.
  PartialFn f{2, 1, {{0}, std::nullopt}};
  SubsetPred ks = api::kerSupp<BooleanEff>(f);
  CHECK(ks.contains(0));
  CHECK(!ks.contains(1));

  // Probabilistic: the defined mass, 1/4 here.
  KernelMap k = probRow(1, {{0, r(1, 4)}});
  CHECK(api::kerSupp<ProbEff>(k).v[0] == r(1, 4));
  CHECK(api::kernel<ProbEff>(k).v[0] == r(3, 4));

  // Quantum: sum K*K, which is p for an assert map.
  Rng rng(41);
  VnAlg x = gen::randomAlg(rng);
  BlockEffect p = gen::blockEffect(rng, x);
  CHECK(QuantumEff::peq(api::kerSupp<QuantumEff>(QuantumEff::assertMap(x, p)), p));
}

TEST_CASE("isTotal across the instances") {
  Rng rng(42);
  FinSet x{3, {}}, y{4, {}};
  CHECK(api::isTotal<BooleanEff>(gen::totalFn(rng, x, y)));
  KernelMap most = probRow(1, {{0, r(9, 10)}});
  CHECK(!api::isTotal<ProbEff>(most));
  VnAlg a = gen::randomAlg(rng);
  CHECK(api::isTotal<QuantumEff>(gen::krausTotal(rng, a, gen::randomAlg(rng))));
}

TEST_CASE("pairing") {
  // pairing(f, 0) is kappa1 . f.
  Rng rng(43);
  FinSet z{3, {}}, x{2, {}}, y{2, {}};
  KernelMap f = gen::kernel(rng, z, x);
  KernelMap h = api::pairing<ProbEff>(f, ProbEff::zero(z, y));
  CHECK(ProbEff::meq(h, ProbEff::compose(ProbEff::inj(x, y, 0), f)));

  // f(x)=1/2|a> into X, g(x)=1/2|b> into Y pair into the forced total map.
  KernelMap fa = probRow(1, {{0, r(1, 2)}});
  KernelMap gb = probRow(1, {{0, r(1, 2)}});
  KernelMap pair = api::pairing<ProbEff>(fa, gb);
  CHECK(api::isTotal<ProbEff>(pair));
  CHECK(pair.rows[0].at(0) == r(1, 2));
  CHECK(pair.rows[0].at(1) == r(1, 2));

  // Reconstruction from projections, checked against brute re-pairing.
  for (int trial = 0; trial < 30; ++trial) {
    KernelMap t = gen::totalKernel(rng, z, FinSet{4, {}});
    FinSet x2{2, {}}, y2{2, {}};
    KernelMap back = api::pairing<ProbEff>(
        ProbEff::compose(ProbEff::pproj(x2, y2, 0), t),
        ProbEff::compose(ProbEff::pproj(x2, y2, 1), t));
    CHECK(ProbEff::meq(back, t));
  }

  // Overlapping kernels are rejected.
  KernelMap heavy = probRow(1, {{0, r(3, 4)}});
  CHECK_THROWS_AS(api::pairing<ProbEff>(heavy, heavy), NotOrthogonal);
}

TEST_CASE("box substitution in the boolean instance") {
  // box_f(V) = {x | f defined at x implies f(x) in V}.
  PartialFn f{3, 2, {{0}, {1}, std::nullopt}};
  SubsetPred v{2, {1, 0}};
  SubsetPred box = api::boxSubst<BooleanEff>(f, v);
  CHECK(box.contains(0));   // lands in V
  CHECK(!box.contains(1));  // lands outside V
  CHECK(box.contains(2));   // undefined, so vacuously true
  // box_f(1) = 1 always.
  Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    PartialFn g = gen::partialFn(rng, FinSet{3, {}}, FinSet{2, {}});
    CHECK(BooleanEff::peq(api::boxSubst<BooleanEff>(g, BooleanEff::truth(FinSet{2, {}})),
                          BooleanEff::truth(FinSet{3, {}})));
  }
}

TEST_CASE("assert and andthen") {
  // assert of truth is the identity, in all three instances.
  FinSet xb{3, {}};
  CHECK(BooleanEff::meq(BooleanEff::assertMap(xb, BooleanEff::truth(xb)), BooleanEff::id(xb)));
  CHECK(ProbEff::meq(ProbEff::assertMap(xb, ProbEff::truth(xb)), ProbEff::id(xb)));
  VnAlg xq{{2, 2}};
  CHECK(QuantumEff::meq(QuantumEff::assertMap(xq, QuantumEff::truth(xq)), QuantumEff::id(xq)));

  // Prob: p(x) = 2/3 gives asrt_p(x) = 2/3 |x>.
  FuzzyPred p{{r(2, 3)}};
  KernelMap ap = ProbEff::assertMap(FinSet{1, {}}, p);
  CHECK(ap.rows[0].at(0) == r(2, 3));

  // andthen is pointwise product; 1 & q = q.
  FinSet x2{2, {}};
  FuzzyPred pp{{r(1, 2), Rational01::one()}};
  FuzzyPred qq{{Rational01::one(), r(1, 3)}};
  FuzzyPred prod = api::andThen<ProbEff>(x2, pp, qq);
  CHECK(prod.v[0] == r(1, 2));
  CHECK(prod.v[1] == r(1, 3));
  Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    FuzzyPred q = gen::fuzzy(rng, x2);
    CHECK(ProbEff::peq(api::andThen<ProbEff>(x2, ProbEff::truth(x2), q), q));
  }
}

TEST_CASE("instrument routes by the predicate") {
  // Prob: p(x) = 1/3 routes 1/3 left and 2/3 right.
  FinSet x{1, {}};
  FuzzyPred p{{r(1, 3)}};
  KernelMap instr = api::instrument<ProbEff>(x, p);
  CHECK(instr.rows[0].at(0) == r(1, 3));
  CHECK(instr.rows[0].at(1) == r(2, 3));
  CHECK(api::isTotal<ProbEff>(instr));

  // Boolean: routes left exactly on P.
  FinSet xb{3, {}};
  SubsetPred pb{3, {1, 0, 1}};
  PartialFn ib = api::instrument<BooleanEff>(xb, pb);
  CHECK(ib.valueAt(0) == 0);
  CHECK(ib.valueAt(1) == 3 + 1);
  CHECK(ib.valueAt(2) == 2);
}

TEST_CASE("validity") {
  // omega = 1/2|a> + 1/2|b>, p = indicator{a}.
  KernelMap omega = probRow(2, {{0, r(1, 2)}, {1, r(1, 2)}});
  FuzzyPred p{{Rational01::one(), Rational01::zero()}};
  CHECK(api::validity<ProbEff>(omega, p) == r(1, 2));
  CHECK(api::validity<ProbEff>(omega, ProbEff::truth(FinSet{2, {}})) == Rational01::one());
}

TEST_CASE("galois correspondence spot checks") {
  Rng rng(46);
  // Identity maps are trivial.
  FinSet x{3, {}};
  for (int i = 0; i < 10; ++i) {
    KernelMap omega = gen::probState(rng, x);
    FuzzyPred q = gen::fuzzy(rng, x);
    CHECK(api::galoisCheck<ProbEff>(ProbEff::id(x), omega, q));
  }
  // Random kernels and unital quantum maps.
  for (int i = 0; i < 30; ++i) {
    FinSet y{4, {}};
    KernelMap f = gen::totalKernel(rng, x, y);
    CHECK(api::galoisCheck<ProbEff>(f, gen::probState(rng, x), gen::fuzzy(rng, y)));
  }
  VnAlg m2{{2}};
  for (int i = 0; i < 30; ++i) {
    KrausMap f = gen::krausTotal(rng, m2, m2);
    CHECK(api::galoisCheck<QuantumEff>(f, gen::quantumState(rng, m2), gen::blockEffect(rng, m2)));
  }
  // Partial maps are rejected.
  KernelMap notTotal = probRow(1, {{0, r(1, 2)}});
  CHECK_THROWS_AS(
      api::galoisCheck<ProbEff>(notTotal, gen::probState(rng, FinSet{1, {}}),
                                gen::fuzzy(rng, FinSet{1, {}})),
      NotTotal);
}

TEST_CASE("conditioning is empty exactly at validity zero") {
  KernelMap omega = probRow(2, {{0, Rational01::one()}});
  FuzzyPred awayFromSupport{{Rational01::zero(), Rational01::one()}};
  CHECK(!api::condition<ProbEff>(omega, awayFromSupport).has_value());
  FuzzyPred onSupport{{r(1, 2), Rational01::zero()}};
  CHECK(api::condition<ProbEff>(omega, onSupport).has_value());
}

TEST_CASE("total probability over the trivial test") {
  Rng rng(47);
  FinSet x{3, {}};
  for (int i = 0; i < 20; ++i) {
    KernelMap omega = gen::probState(rng, x);
    FuzzyPred q = gen::fuzzy(rng, x);
    CHECK(api::totalProbability<ProbEff>(omega, {ProbEff::truth(x)}, q));
  }
  CHECK_THROWS_AS(
      api::totalProbability<ProbEff>(gen::probState(rng, x),
                                     {ProbEff::truth(x), ProbEff::truth(x)},
                                     gen::fuzzy(rng, x)),
      NotATest);
}

TEST_CASE("decompose recovers cotuple components") {
  Rng rng(48);
  FinSet x1{2, {}}, x2{3, {}}, y{3, {}};
  // f = kappa1 . g has p = 1 and left component g.
  KernelMap g = gen::totalKernel(rng, y, x1);
  KernelMap f = ProbEff::compose(ProbEff::inj(x1, x2, 0), g);
  auto d = api::decompose<ProbEff>(x1, x2, f);
  CHECK(ProbEff::peq(d.pred, ProbEff::truth(y)));
  CHECK(ProbEff::meq(api::recompose<ProbEff>(x1, x2, d), f));
  CHECK(ProbEff::meq(d.left, g));

  for (int i = 0; i < 30; ++i) {
    KernelMap t = gen::totalKernel(rng, y, FinSet{5, {}});
    auto dt = api::decompose<ProbEff>(x1, x2, t);
    CHECK(ProbEff::meq(api::recompose<ProbEff>(x1, x2, dt), t));
  }
}

TEST_CASE("sharpness across the instances") {
  CHECK(BooleanEff::isSharp(SubsetPred{2, {1, 0}}));
  CHECK(ProbEff::isSharp(FuzzyPred{{Rational01::one(), Rational01::zero(), Rational01::one()}}));
  CHECK(!ProbEff::isSharp(FuzzyPred{{r(1, 2), Rational01::zero()}}));
  VnAlg m2{{2}};
  Rng rng(49);
  CHECK(QuantumEff::isSharp(gen::blockProjection(rng, m2)));
  CHECK(!QuantumEff::isSharp(BlockEffect{m2, {CMatrix::diag({0.5, 1.0})}}));
}

TEST_CASE("purity of substates") {
  CHECK(ProbEff::isPureSubstate(probRow(2, {{0, r(3, 4)}})));
  CHECK(!ProbEff::isPureSubstate(probRow(2, {{0, r(1, 2)}, {1, r(1, 2)}})));
  VnAlg m2{{2}};
  double s = std::sqrt(0.5);
  CHECK(QuantumEff::isPureSubstate(QuantumEff::vectorState(m2, 0, {cplx(s, 0), cplx(s, 0)})));
  BlockState mixed{m2, {CMatrix::diag({0.5, 0.5})}};
  CHECK(!QuantumEff::isPureSubstate(QuantumEff::stateFromDensity(mixed)));
}

TEST_CASE("theta is total and inverts on sharp predicates") {
  Rng rng(50);
  FinSet x{4, {}};
  for (int i = 0; i < 20; ++i) {
    FuzzyPred p = gen::fuzzy(rng, x);
    CHECK(api::isTotal<ProbEff>(api::theta<ProbEff>(x, p)));
  }
  VnAlg m22{{2, 2}};
  for (int i = 0; i < 10; ++i) {
    BlockEffect s = gen::blockProjection(rng, m22);
    auto th = api::theta<QuantumEff>(m22, s);
    auto inv = api::thetaInverse<QuantumEff>(m22, s);
    auto c = QuantumEff::comprehend(m22, s);
    CHECK(QuantumEff::meq(QuantumEff::compose(inv, th), QuantumEff::id(c.obj)));
  }
}

TEST_CASE("factorisation preconditions are enforced") {
  // Quotient: p not below ker f.
  FinSet x{2, {}};
  FuzzyPred p{{r(1, 2), Rational01::zero()}};
  ProbQuot q = ProbEff::quotient(x, p);
  KernelMap full = ProbEff::id(x);  // ker = 0, so p is not below it
  CHECK_THROWS_AS(ProbEff::factorQuotient(q, full), PreconditionFailed);

  // Comprehension: support leaking outside {p = 1}.
  FuzzyPred sharp{{Rational01::one(), Rational01::zero()}};
  ProbCompr c = ProbEff::comprehend(x, sharp);
  KernelMap leak = probRow(2, {{1, r(1, 2)}});
  CHECK_THROWS_AS(ProbEff::factorComprehension(c, leak), PreconditionFailed);

  // Quantum comprehension: a map escaping the compressed range.
  VnAlg m2{{2}};
  BlockEffect proj{m2, {CMatrix::diag({1.0, 0.0})}};
  QCompr qc = QuantumEff::comprehend(m2, proj);
  KrausMap ident = QuantumEff::id(m2);
  CHECK_THROWS_AS(QuantumEff::factorComprehension(qc, ident), PreconditionFailed);

  // Quantum quotient: kernel too small.
  BlockEffect half{m2, {CMatrix::diag({0.5, 0.5})}};
  QQuot qq = QuantumEff::quotient(m2, half);
  CHECK_THROWS_AS(QuantumEff::factorQuotient(qq, QuantumEff::id(m2)), PreconditionFailed);

  // Decomposition needs a total map.
  KernelMap partial = probRow(4, {{0, r(1, 2)}});
  CHECK_THROWS_AS(api::decompose<ProbEff>(FinSet{2, {}}, FinSet{2, {}}, partial), NotTotal);
}
