#include "stpq/rational.hpp"

#include <cctype>
#include <ostream>

namespace stpq {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) {
    throw DomainError("rational: zero denominator");
  }
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw DomainError("rational: zero denominator");
  }
  value_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw DomainError("rational: division by zero");
  }
  return Rational(mpq_class(a.value_ / b.value_), Rational::canonical_tag{});
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (const char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

mpz_class pow10(unsigned digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

[[noreturn]] void malformed(std::string_view token) {
  throw ParseError("malformed rational token '" + std::string(token) + "'");
}

// Rounds num/den (den > 0) to the nearest integer, ties away from zero.
mpz_class round_quotient(const mpz_class& num, const mpz_class& den) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * abs(r) >= den) {
    q += sgn(num) < 0 ? -1 : 1;
  }
  return q;
}

// Lays out a nonnegative integer of scaled units (10^-digits) as a decimal.
std::string format_scaled(const mpz_class& units, unsigned digits, bool negative) {
  std::string body = units.get_str();
  if (body.size() <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  if (digits > 0) {
    body.insert(body.size() - digits, 1, '.');
  }
  return negative ? "-" + body : body;
}

} // namespace

Rational parse_rational(std::string_view token) {
  std::string_view rest = token;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  const auto slash = rest.find('/');
  const auto point = rest.find('.');

  mpq_class value;
  if (slash != std::string_view::npos) {
    const std::string_view num = rest.substr(0, slash);
    const std::string_view den = rest.substr(slash + 1);
    if (point != std::string_view::npos || !all_digits(num) || !all_digits(den)) {
      malformed(token);
    }
    const mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw ParseError("zero denominator in '" + std::string(token) + "'");
    }
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (point != std::string_view::npos) {
    const std::string_view ipart = rest.substr(0, point);
    const std::string_view fpart = rest.substr(point + 1);
    if (!all_digits(ipart) || !all_digits(fpart)) {
      malformed(token);
    }
    const mpz_class scaled(std::string(ipart) + std::string(fpart), 10);
    value = mpq_class(scaled, pow10(static_cast<unsigned>(fpart.size())));
  } else {
    if (!all_digits(rest)) {
      malformed(token);
    }
    value = mpq_class(mpz_class(std::string(rest), 10));
  }

  value.canonicalize();
  if (negative) {
    value = -value;
  }
  return Rational(std::move(value));
}

std::string to_decimal_string(const Rational& r, unsigned digits) {
  const mpz_class scaled_num = r.numerator() * pow10(digits);
  const mpz_class units = round_quotient(scaled_num, r.denominator());
  return format_scaled(abs(units), digits, sgn(units) < 0);
}

std::string sqrt_decimal_string(const Rational& r, unsigned digits) {
  if (r.sign() < 0) {
    throw DomainError("sqrt of negative rational");
  }
  const mpz_class n = r.numerator();
  const mpz_class d = r.denominator();

  // floor(sqrt(n/d) * 10^digits) = floor(sqrt(floor(n * 10^(2*digits) / d))).
  const mpz_class scaled = n * pow10(2 * digits);
  mpz_class quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());

  // Round up when the true value is at or above the halfway point:
  // sqrt(scaled/d) >= root + 1/2  <=>  4*scaled >= d*(4*root^2 + 4*root + 1).
  if (4 * scaled >= d * (4 * root * root + 4 * root + 1)) {
    root += 1;
  }
  return format_scaled(root, digits, false);
}

} // namespace stpq
