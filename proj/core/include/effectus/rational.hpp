#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "effectus/errors.hpp"

namespace effectus {

/// Exact rational in the unit interval.
///
/// Always stored in lowest terms with a positive denominator, so equality is
/// structural. Arithmetic goes through 128-bit intermediates and raises
/// OverflowError if a reduced result no longer fits in 64 bits; results are
/// never silently wrapped or rounded.
class Rational01 {
 public:
  Rational01() : num_(0), den_(1) {}

  /// num/den, requiring 0 <= num/den <= 1.
  Rational01(std::int64_t num, std::int64_t den);

  static Rational01 zero() { return Rational01(); }
  static Rational01 one() { return Rational01(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isOne() const { return num_ == den_; }

  /// Partial sum: defined iff a + b <= 1.
  static std::optional<Rational01> add(const Rational01& a, const Rational01& b);

  /// Defined iff b <= a.
  static std::optional<Rational01> sub(const Rational01& a, const Rational01& b);

  static Rational01 mul(const Rational01& a, const Rational01& b);

  /// Exact division a/b for b != 0, defined iff a <= b.
  static std::optional<Rational01> div(const Rational01& a, const Rational01& b);

  Rational01 complement() const;  // 1 - x

  static bool leq(const Rational01& a, const Rational01& b);

  bool operator==(const Rational01& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational01& o) const { return !(*this == o); }
  bool operator<(const Rational01& o) const { return leq(*this, o) && *this != o; }

  double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "num/den", always with the slash.
  std::string str() const;
  static Rational01 parse(const std::string& s);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Unbounded nonnegative rational accumulator. Used where running sums may
/// exceed 1 before being compared against it (subdistribution masses, tests).
class RatAcc {
 public:
  RatAcc() : num_(0), den_(1) {}
  explicit RatAcc(const Rational01& r) : num_(r.num()), den_(r.den()) {}
  RatAcc(std::int64_t num, std::int64_t den);

  void add(const Rational01& r);

  bool leqOne() const { return num_ <= den_; }
  bool isOne() const { return num_ == den_; }
  bool isZero() const { return num_ == 0; }

  /// Requires the accumulated value to be <= 1.
  Rational01 toRational01() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace effectus
