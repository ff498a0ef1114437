#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stpq/error.hpp"

namespace stpq {

/// Exact rational scalar. Always stored canonically: denominator >= 1,
/// gcd(|num|, den) = 1, zero as 0/1. Arbitrary-precision via GMP.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long value) : value_(value) {} // NOLINT: implicit by design
  Rational(long num, long den);

  /// Adopts an arbitrary mpq value, canonicalizing it.
  explicit Rational(mpq_class value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// "n" when the denominator is 1, "n/d" otherwise. Round-trips through
  /// parse_rational.
  std::string to_string() const;

  double to_double() const { return value_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ + b.value_), canonical_tag{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ - b.value_), canonical_tag{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.value_ * b.value_), canonical_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_), canonical_tag{});
  }

  Rational& operator+=(const Rational& b) {
    value_ += b.value_;
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    value_ -= b.value_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    value_ *= b.value_;
    return *this;
  }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }

  friend Rational abs(const Rational& a) {
    return Rational(mpq_class(abs(a.value_)), canonical_tag{});
  }

private:
  // mpq arithmetic preserves canonical form; this path skips the re-check.
  struct canonical_tag {};
  Rational(mpq_class value, canonical_tag) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses one scalar token: integer ("-3"), fraction ("2/3"), or decimal
/// ("0.5", converted exactly — d digits after the point give denominator
/// 10^d). Anything else, including a zero denominator, is a ParseError.
Rational parse_rational(std::string_view token);

/// Decimal expansion of r rounded to `digits` places after the point
/// (half away from zero).
std::string to_decimal_string(const Rational& r, unsigned digits);

/// Decimal expansion of sqrt(r) rounded to `digits` places, computed by
/// exact integer square root; r must be nonnegative. This is the only
/// place a square root is ever taken — the exact layer stays polynomial.
std::string sqrt_decimal_string(const Rational& r, unsigned digits);

} // namespace stpq
