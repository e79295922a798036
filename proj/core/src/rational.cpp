#include "effectus/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace effectus {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError(ctx);
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac {
  std::int64_t num;
  std::int64_t den;
};

Frac reduce(i128 num, i128 den, const char* ctx) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Frac{narrow(num, ctx), narrow(den, ctx)};
}

}  // namespace

Rational01::Rational01(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error("Rational01: denominator must be positive");
  if (num < 0 || num > den) throw Error("Rational01: value outside [0,1]");
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::optional<Rational01> Rational01::add(const Rational01& a, const Rational01& b) {
  i128 num = (i128)a.num_ * b.den_ + (i128)b.num_ * a.den_;
  i128 den = (i128)a.den_ * b.den_;
  if (num > den) return std::nullopt;
  Frac f = reduce(num, den, "rational add");
  Rational01 r;
  r.num_ = f.num;
  r.den_ = f.den;
  return r;
}

std::optional<Rational01> Rational01::sub(const Rational01& a, const Rational01& b) {
  i128 num = (i128)a.num_ * b.den_ - (i128)b.num_ * a.den_;
  if (num < 0) return std::nullopt;
  i128 den = (i128)a.den_ * b.den_;
  Frac f = reduce(num, den, "rational sub");
  Rational01 r;
  r.num_ = f.num;
  r.den_ = f.den;
  return r;
}

Rational01 Rational01::mul(const Rational01& a, const Rational01& b) {
  Frac f = reduce((i128)a.num_ * b.num_, (i128)a.den_ * b.den_, "rational mul");
  Rational01 r;
  r.num_ = f.num;
  r.den_ = f.den;
  return r;
}

std::optional<Rational01> Rational01::div(const Rational01& a, const Rational01& b) {
  if (b.isZero()) return std::nullopt;
  i128 num = (i128)a.num_ * b.den_;
  i128 den = (i128)a.den_ * b.num_;
  if (num > den) return std::nullopt;
  Frac f = reduce(num, den, "rational div");
  Rational01 r;
  r.num_ = f.num;
  r.den_ = f.den;
  return r;
}

Rational01 Rational01::complement() const {
  Rational01 r;
  r.num_ = den_ - num_;
  r.den_ = den_;
  std::int64_t g = std::gcd(r.num_, r.den_);
  if (g > 1) {
    r.num_ /= g;
    r.den_ /= g;
  }
  return r;
}

bool Rational01::leq(const Rational01& a, const Rational01& b) {
  return (i128)a.num_ * b.den_ <= (i128)b.num_ * a.den_;
}

std::string Rational01::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational01 Rational01::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(s);
      return Rational01(n, 1);
    }
    std::int64_t n = std::stoll(s.substr(0, slash));
    std::int64_t d = std::stoll(s.substr(slash + 1));
    return Rational01(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

RatAcc::RatAcc(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw Error("RatAcc: nonnegative value required");
  Frac f = reduce(num, den, "rational accumulator");
  num_ = f.num;
  den_ = f.den;
}

void RatAcc::add(const Rational01& r) {
  i128 num = (i128)num_ * r.den() + (i128)r.num() * den_;
  i128 den = (i128)den_ * r.den();
  Frac f = reduce(num, den, "rational accumulator");
  num_ = f.num;
  den_ = f.den;
}

Rational01 RatAcc::toRational01() const {
  if (!leqOne()) throw Error("accumulated mass exceeds 1");
  return Rational01(num_, den_);
}

}  // namespace effectus
