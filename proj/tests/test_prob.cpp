#include "doctest.h"

#include "effectus/api.hpp"
#include "effectus/generators.hpp"
#include "effectus/prob.hpp"
#include "effectus/rng.hpp"

using namespace effectus;
using E = ProbEff;

namespace {

Rational01 r(int n, int d) { return Rational01(n, d); }

KernelMap singleRow(int cod, std::vector<std::pair<int, Rational01>> w) {
  KernelMap f{1, cod, {SubDist{}}};
  for (auto& [i, v] : w) f.rows[0].set(i, v);
  return f;
}

}  // namespace

TEST_CASE("kernel composition is exact matrix multiplication") {
  FinSet x{1, {}};
  // f(x) = 1/2 |y>, g(y) = 1/2 |z>  =>  (g f)(x) = 1/4 |z>.
  KernelMap f = singleRow(1, {{0, r(1, 2)}});
  KernelMap g = singleRow(1, {{0, r(1, 2)}});
  KernelMap gf = E::compose(g, f);
  CHECK(gf.rows[0].at(0) == r(1, 4));

  // Identity is neutral.
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    FinSet a{3, {}}, b{4, {}};
    KernelMap k = gen::kernel(rng, a, b);
    CHECK(E::meq(E::compose(k, E::id(a)), k));
    CHECK(E::meq(E::compose(E::id(b), k), k));
  }

  // Associativity, both association orders computed.
  for (int trial = 0; trial < 30; ++trial) {
    FinSet s{3, {}};
    KernelMap k1 = gen::kernel(rng, s, s);
    KernelMap k2 = gen::kernel(rng, s, s);
    KernelMap k3 = gen::kernel(rng, s, s);
    CHECK(E::meq(E::compose(E::compose(k3, k2), k1), E::compose(k3, E::compose(k2, k1))));
  }
}

TEST_CASE("state pushforward") {
  Rng rng(22);
  FinSet x{4, {}}, y{3, {}};
  for (int trial = 0; trial < 30; ++trial) {
    KernelMap f = gen::kernel(rng, x, y);
    // Dirac states recover rows.
    int pt = rng.intIn(0, x.size - 1);
    KernelMap omega{1, x.size, {SubDist::dirac(pt)}};
    KernelMap push = E::compose(f, omega);
    CHECK(push.rows[0].w == f.rows[pt].w);

    // Subunitality: mass never grows.
    KernelMap sub = gen::kernel(rng, FinSet{1, {}}, x);
    KernelMap pushed = E::compose(f, sub);
    CHECK(Rational01::leq(pushed.rows[0].mass(), sub.rows[0].mass()));
  }
}

TEST_CASE("total substitution") {
  FinSet x{1, {}}, y{2, {}};
  KernelMap f = singleRow(2, {{0, r(1, 2)}, {1, r(1, 2)}});
  FuzzyPred q{{Rational01::one(), Rational01::zero()}};
  CHECK(E::predPullback(f, q).v[0] == r(1, 2));
  CHECK(E::predPullback(f, E::truth(y)).v[0] == Rational01::one());

  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    FinSet a{3, {}}, b{3, {}};
    KernelMap t = gen::totalKernel(rng, a, b);
    FuzzyPred p = gen::fuzzy(rng, b);
    Rational01 s = gen::rational(rng);
    CHECK(E::peq(E::predPullback(t, E::scalarMulPred(s, p)),
                 E::scalarMulPred(s, E::predPullback(t, p))));
    // Agrees with the box substitution on total maps.
    CHECK(E::peq(E::predPullback(t, p), api::boxSubst<E>(t, p)));
  }

  KernelMap notTotal = singleRow(2, {{0, r(1, 2)}});
  CHECK_THROWS_AS(E::predPullback(notTotal, q), NotTotal);
}

TEST_CASE("box substitution adds the undefined mass") {
  // f(x) = 1/2 |y>, q(y) = 1  =>  box_f(q)(x) = 1/2 + 1/2 = 1.
  KernelMap f = singleRow(1, {{0, r(1, 2)}});
  FuzzyPred q{{Rational01::one()}};
  CHECK(api::boxSubst<E>(f, q).v[0] == Rational01::one());
  // ker and ker-supp of the same map.
  CHECK(api::kerSupp<E>(f).v[0] == r(1, 2));
  CHECK(api::kernel<E>(f).v[0] == r(1, 2));
}

TEST_CASE("tensor, marginals, copier") {
  FinSet x{3, {}};
  auto delta = E::copier(x);
  CHECK(E::meq(E::compose(E::marginal(x, x, 0), delta), E::id(x)));
  CHECK(E::meq(E::compose(E::marginal(x, x, 1), delta), E::id(x)));

  Rng rng(24);
  // Tensor of Diracs is the Dirac on the pair.
  int a = rng.intIn(0, 2), b = rng.intIn(0, 2);
  KernelMap da{1, 3, {SubDist::dirac(a)}}, db{1, 3, {SubDist::dirac(b)}};
  KernelMap pair = E::tensor(da, db);
  CHECK(pair.rows[0].at(a * 3 + b) == Rational01::one());
  CHECK(pair.rows[0].w.size() == 1);

  // Copier law for asserts.
  for (int trial = 0; trial < 30; ++trial) {
    FuzzyPred p = gen::fuzzy(rng, x);
    auto f = E::assertMap(x, p);
    CHECK(E::meq(E::compose(E::tensor(f, E::id(x)), delta), E::compose(delta, f)));
  }
}

TEST_CASE("side-effect-free kernels are asserts") {
  Rng rng(25);
  FinSet x{4, {}};
  for (int trial = 0; trial < 30; ++trial) {
    // Diagonal kernels below the identity.
    KernelMap f{x.size, x.size, {}};
    f.rows.resize(x.size);
    for (int i = 0; i < x.size; ++i) f.rows[i].set(i, gen::rational(rng));
    CHECK(E::meq(f, E::assertMap(x, E::kerSupp(f))));
  }
}

TEST_CASE("conditioning matches elementary conditional probability") {
  // omega = 1/2|a> + 1/2|b>, p = (1, 1/2): omega|p = 2/3|a> + 1/3|b>, and
  // with q = (0,1) both Bayes sides equal 1/4.
  FinSet x{2, {}};
  KernelMap omega = singleRow(2, {{0, r(1, 2)}, {1, r(1, 2)}});
  FuzzyPred p{{Rational01::one(), r(1, 2)}};
  auto cond = api::condition<E>(omega, p);
  REQUIRE(cond.has_value());
  CHECK(cond->rows[0].at(0) == r(2, 3));
  CHECK(cond->rows[0].at(1) == r(1, 3));

  FuzzyPred q{{Rational01::zero(), Rational01::one()}};
  Rational01 lhs = Rational01::mul(api::validity<E>(*cond, q), api::validity<E>(omega, p));
  CHECK(lhs == r(1, 4));
  CHECK(api::validity<E>(omega, api::andThen<E>(x, p, q)) == r(1, 4));

  // Indicator conditioning: omega|1_M (A) = omega(M and A)/omega(M).
  Rng rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    FinSet y{4, {}};
    KernelMap w = gen::probState(rng, y);
    SubsetPred m = gen::subset(rng, y);
    FuzzyPred ind{{}};
    for (int i = 0; i < 4; ++i)
      ind.v.push_back(m.contains(i) ? Rational01::one() : Rational01::zero());
    auto vm = api::validity<E>(w, ind);
    auto c = api::condition<E>(w, ind);
    CHECK(c.has_value() == !vm.isZero());
    if (!c) continue;
    for (int i = 0; i < 4; ++i) {
      Rational01 exp = m.contains(i) ? *Rational01::div(w.rows[0].at(i), vm) : Rational01::zero();
      CHECK(c->rows[0].at(i) == exp);
    }
  }
}

TEST_CASE("comprehension and quotient formulas") {
  FinSet x{3, {}};
  FuzzyPred p{{Rational01::one(), r(1, 2), Rational01::zero()}};

  ProbCompr c = E::comprehend(x, p);
  CHECK(c.obj.size == 1);
  CHECK(c.map.rows[0].at(0) == Rational01::one());  // embeds a -> 1|a>

  ProbQuot q = E::quotient(x, p);
  CHECK(q.obj.size == 2);
  CHECK(q.map.rows[0].isZero());                 // xi(a) = 0
  CHECK(q.map.rows[1].at(0) == r(1, 2));         // xi(b) = 1/2 |b>
  CHECK(q.map.rows[2].at(1) == Rational01::one());  // xi(c) = 1 |c>

  // Floor and ceiling of the same predicate.
  FuzzyPred fl = api::floorOf<E>(x, p);
  FuzzyPred ce = api::ceilOf<E>(x, p);
  CHECK(E::peq(fl, FuzzyPred{{Rational01::one(), Rational01::zero(), Rational01::zero()}}));
  CHECK(E::peq(ce, FuzzyPred{{Rational01::one(), Rational01::one(), Rational01::zero()}}));
}

TEST_CASE("first isomorphism probe") {
  // Deterministic total bijections pass.
  KernelMap swap{2, 2, {SubDist::dirac(1), SubDist::dirac(0)}};
  CHECK(E::firstIsoProbe(swap));

  // The single-point half-mass kernel does not.
  KernelMap half = singleRow(1, {{0, r(1, 2)}});
  CHECK(!E::firstIsoProbe(half));

  // Quotient units of properly fuzzy predicates do not.
  FinSet x{3, {}};
  FuzzyPred p{{r(1, 2), Rational01::zero(), r(3, 4)}};
  CHECK(!E::firstIsoProbe(E::quotient(x, p).map));
}

TEST_CASE("normalisation") {
  KernelMap omega = singleRow(2, {{0, r(1, 4)}, {1, r(1, 4)}});
  auto n = E::normalizeSub(omega);
  REQUIRE(n.has_value());
  CHECK(n->second == r(1, 2));
  CHECK(n->first.rows[0].at(0) == r(1, 2));
  CHECK(n->first.rows[0].at(1) == r(1, 2));

  CHECK(!E::normalizeSub(E::zero(FinSet{1, {}}, FinSet{2, {}})).has_value());
}

TEST_CASE("pure substates have singleton support") {
  CHECK(E::isPureSubstate(singleRow(2, {{0, r(3, 4)}})));
  CHECK(!E::isPureSubstate(singleRow(2, {{0, r(1, 2)}, {1, r(1, 2)}})));
  CHECK(!E::isPureSubstate(E::zero(FinSet{1, {}}, FinSet{2, {}})));
}

TEST_CASE("image is the indicator of the reachable support") {
  // f(x) = 1/3 |y1> + 1/6 |y2> inside a three-point codomain.
  KernelMap f = singleRow(3, {{0, r(1, 3)}, {1, r(1, 6)}});
  FuzzyPred im = E::image(f);
  CHECK(im.v[0] == Rational01::one());
  CHECK(im.v[1] == Rational01::one());
  CHECK(im.v[2] == Rational01::zero());
}
