#include "doctest.h"

#include "effectus/boolean.hpp"
#include "effectus/generators.hpp"
#include "effectus/rng.hpp"

using namespace effectus;
using E = BooleanEff;

namespace {

// Independent composition oracle: evaluate pointwise through explicit
// definedness checks rather than the table plumbing.
std::optional<int> oracleCompose(const PartialFn& g, const PartialFn& f, int x) {
  if (!f.definedAt(x)) return std::nullopt;
  int mid = f.valueAt(x);
  if (!g.definedAt(mid)) return std::nullopt;
  return g.valueAt(mid);
}

PartialFn nthPartialFn(int dom, int cod, int rank) {
  PartialFn f{dom, cod, {}};
  f.table.resize(dom);
  for (int i = 0; i < dom; ++i) {
    int d = rank % (cod + 1);
    rank /= (cod + 1);
    if (d < cod) f.table[i] = d;
  }
  return f;
}

}  // namespace

TEST_CASE("composition against the pointwise oracle, exhaustively on 2->2->2") {
  for (int rf = 0; rf < 9; ++rf)
    for (int rg = 0; rg < 9; ++rg) {
      PartialFn f = nthPartialFn(2, 2, rf);
      PartialFn g = nthPartialFn(2, 2, rg);
      PartialFn gf = E::compose(g, f);
      for (int x = 0; x < 2; ++x) {
        auto expect = oracleCompose(g, f, x);
        CHECK(gf.table[x] == expect);
      }
    }
}

TEST_CASE("composition basics") {
  FinSet x{3, {}};
  PartialFn f{2, 3, {{0}, std::nullopt}};  // f(a)=0, f(b) undefined
  CHECK(E::meq(E::compose(E::id(x), f), f));
  CHECK(E::meq(E::compose(f, E::id(FinSet{2, {}})), f));

  PartialFn g{3, 2, {std::nullopt, {1}, {0}}};  // g(0) undefined
  PartialFn gf = E::compose(g, f);
  CHECK(!gf.definedAt(0));  // f lands where g is undefined
  CHECK(!gf.definedAt(1));
}

TEST_CASE("boolean algebra operations") {
  FinSet x{3, {}};
  Rng rng(3);
  SubsetPred p = gen::subset(rng, x);
  CHECK(E::peq(subsetMeet(p, subsetComplement(p)), E::falsity(x)));

  // Exhaustive distributivity over |X| = 3.
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        SubsetPred pa{3, {std::uint8_t(a & 1), std::uint8_t((a >> 1) & 1), std::uint8_t((a >> 2) & 1)}};
        SubsetPred pb{3, {std::uint8_t(b & 1), std::uint8_t((b >> 1) & 1), std::uint8_t((b >> 2) & 1)}};
        SubsetPred pc{3, {std::uint8_t(c & 1), std::uint8_t((c >> 1) & 1), std::uint8_t((c >> 2) & 1)}};
        CHECK(E::peq(subsetMeet(pa, subsetJoin(pb, pc)),
                     subsetJoin(subsetMeet(pa, pb), subsetMeet(pa, pc))));
      }

  // P & Q through the assert map is intersection.
  SubsetPred q = gen::subset(rng, x);
  PartialFn viaAssert = E::compose(E::predToMorph(x, q), E::assertMap(x, p));
  CHECK(E::peq(E::morphToPred(viaAssert), subsetMeet(p, q)));
}

TEST_CASE("asserts of complementary subsets annihilate") {
  FinSet x{4, {}};
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    SubsetPred p = gen::subset(rng, x);
    CHECK(E::isZeroM(E::compose(E::assertMap(x, p), E::assertMap(x, subsetComplement(p)))));
  }
}

TEST_CASE("quotient is comprehension of the complement") {
  FinSet x{4, {}};
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    SubsetPred p = gen::subset(rng, x);
    BoolQuot q = E::quotient(x, p);
    BoolCompr c = E::comprehend(x, subsetComplement(p));
    CHECK(q.obj.size == c.obj.size);
    // xi is the partial identity defined exactly off P.
    for (int e = 0; e < x.size; ++e) CHECK(q.map.definedAt(e) == !p.contains(e));
  }
}

TEST_CASE("extensive pullback splits along preimages") {
  FinSet x1{2, {}}, x2{3, {}};

  // Constant map into the left summand leaves Y2 empty.
  PartialFn constant{4, 5, {{0}, {0}, {0}, {0}}};
  ExtensiveSplit s = E::extensivePullback(x1, x2, constant);
  CHECK(s.y1.size == 4);
  CHECK(s.y2.size == 0);

  // The identity on X1+X2 recovers the summands themselves.
  ExtensiveSplit si = E::extensivePullback(x1, x2, E::id(FinSet{5, {}}));
  CHECK(si.y1.size == x1.size);
  CHECK(si.y2.size == x2.size);

  // Random total maps on |Y| = 5 recompose: kappa_i . f_i = f . incl_i and
  // the cotuple of inclusions hits every element exactly once.
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    FinSet y{5, {}};
    PartialFn f = gen::totalFn(rng, y, FinSet{5, {}});
    ExtensiveSplit sp = E::extensivePullback(x1, x2, f);
    CHECK(sp.y1.size + sp.y2.size == y.size);
    PartialFn viaLeft = E::compose(f, sp.incl1);
    PartialFn injLeft = E::compose(E::inj(x1, x2, 0), sp.f1);
    CHECK(E::meq(viaLeft, injLeft));
    PartialFn viaRight = E::compose(f, sp.incl2);
    PartialFn injRight = E::compose(E::inj(x1, x2, 1), sp.f2);
    CHECK(E::meq(viaRight, injRight));
    std::vector<int> hits(y.size, 0);
    for (int i = 0; i < sp.y1.size; ++i) hits[sp.incl1.valueAt(i)]++;
    for (int i = 0; i < sp.y2.size; ++i) hits[sp.incl2.valueAt(i)]++;
    for (int h : hits) CHECK(h == 1);
  }

  PartialFn partial{2, 5, {{0}, std::nullopt}};
  CHECK_THROWS_AS(E::extensivePullback(x1, x2, partial), NotTotal);
}

TEST_CASE("kernel and image") {
  // f(a)=c, f(b) undefined: domain predicate {a}, image {c}.
  PartialFn f{2, 3, {{2}, std::nullopt}};
  SubsetPred ks = E::kerSupp(f);
  CHECK(ks.contains(0));
  CHECK(!ks.contains(1));
  SubsetPred im = E::image(f);
  CHECK(im.contains(2));
  CHECK(!im.contains(0));
  CHECK(!im.contains(1));
}
