#include "doctest.h"

#include "effectus/rational.hpp"
#include "effectus/rng.hpp"

using namespace effectus;

TEST_CASE("partial sum on the unit interval") {
  CHECK(*Rational01::add(Rational01(1, 3), Rational01(1, 3)) == Rational01(2, 3));
  CHECK(!Rational01::add(Rational01(3, 4), Rational01(1, 2)).has_value());

  // Unit law on random elements.
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    int den = rng.intIn(1, 16);
    Rational01 x(rng.intIn(0, den), den);
    CHECK(*Rational01::add(x, Rational01::zero()) == x);
  }
}

TEST_CASE("orthosupplement") {
  CHECK(Rational01::zero().complement() == Rational01::one());
  CHECK(Rational01(2, 5).complement() == Rational01(3, 5));

  Rng rng(18);
  for (int i = 0; i < 50; ++i) {
    int den = rng.intIn(1, 16);
    Rational01 x(rng.intIn(0, den), den);
    CHECK(x.complement().complement() == x);
    CHECK(*Rational01::add(x, x.complement()) == Rational01::one());
  }
}

TEST_CASE("order") {
  CHECK(Rational01::leq(Rational01(1, 4), Rational01(1, 2)));
  CHECK(!Rational01::leq(Rational01(1, 2), Rational01(1, 4)));
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    int den = rng.intIn(1, 16);
    Rational01 x(rng.intIn(0, den), den);
    CHECK(Rational01::leq(x, Rational01::one()));
    // a orth b iff a <= b-orth.
    Rational01 y(rng.intIn(0, den), den);
    CHECK(Rational01::add(x, y).has_value() == Rational01::leq(x, y.complement()));
  }
}

TEST_CASE("multiplication and division") {
  CHECK(Rational01::mul(Rational01::one(), Rational01(3, 7)) == Rational01(3, 7));
  CHECK(Rational01::mul(Rational01(1, 2), Rational01(1, 2)) == Rational01(1, 4));
  CHECK(*Rational01::div(Rational01(1, 4), Rational01(1, 2)) == Rational01(1, 2));
  CHECK(!Rational01::div(Rational01(1, 2), Rational01(1, 4)).has_value());
  CHECK(!Rational01::div(Rational01(1, 2), Rational01::zero()).has_value());
}

TEST_CASE("normalisation is eager and equality structural") {
  CHECK(Rational01(2, 4) == Rational01(1, 2));
  CHECK(Rational01(0, 5) == Rational01::zero());
  CHECK(Rational01(6, 6).num() == 1);
  CHECK(Rational01(6, 6).den() == 1);
}

TEST_CASE("serialization round trip") {
  CHECK(Rational01(1, 2).str() == "1/2");
  CHECK(Rational01::zero().str() == "0/1");
  CHECK(Rational01::parse("3/9") == Rational01(1, 3));
  CHECK(Rational01::parse("1") == Rational01::one());
  CHECK_THROWS_AS(Rational01::parse("7/4"), Error);
  CHECK_THROWS_AS(Rational01::parse("x/y"), ParseError);
}

TEST_CASE("constructor rejects values outside the interval") {
  CHECK_THROWS_AS(Rational01(3, 2), Error);
  CHECK_THROWS_AS(Rational01(-1, 2), Error);
  CHECK_THROWS_AS(Rational01(1, 0), Error);
}

TEST_CASE("overflow is a hard error, never a wrap") {
  Rational01 big(1, (std::int64_t)1 << 62);
  Rational01 odd(1, ((std::int64_t)1 << 62) - 1);
  CHECK_THROWS_AS(Rational01::add(big, odd), OverflowError);
}

TEST_CASE("accumulator tracks masses above 1") {
  RatAcc acc;
  acc.add(Rational01(2, 3));
  acc.add(Rational01(1, 3));
  CHECK(acc.isOne());
  acc.add(Rational01(1, 2));
  CHECK(!acc.leqOne());
  CHECK_THROWS_AS(acc.toRational01(), Error);
}
