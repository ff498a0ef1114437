#include <doctest.h>

#include "stpq/random.hpp"
#include "stpq/rational.hpp"

using namespace stpq;

TEST_CASE("construction reduces and normalizes signs") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(6, 3).to_string() == "2");
}

TEST_CASE("zero denominator and division by zero are domain errors") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational(3) / Rational(0), DomainError);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(0) <= Rational(0));
  CHECK(Rational(7, 5) > Rational(1));
}

TEST_CASE("token parsing") {
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-12.250") == Rational(-49, 4));
  CHECK(parse_rational("0.1") == Rational(1, 10)); // exact, not binary float

  for (const char* bad : {"", "+", "-", "abc", "1.2.3", "1/2/3", "1/2.5", ".5",
                          "5.", "1//2", "2x", "--1"}) {
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
  CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
}

TEST_CASE("to_string round-trips through the parser") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const Rational r = random_rational(rng, 1000, 1000);
    CHECK(parse_rational(r.to_string()) == r);
  }
}

TEST_CASE("decimal formatting rounds half away from zero") {
  CHECK(to_decimal_string(Rational(1, 2), 3) == "0.500");
  CHECK(to_decimal_string(Rational(-1, 3), 6) == "-0.333333");
  CHECK(to_decimal_string(Rational(2, 3), 6) == "0.666667");
  CHECK(to_decimal_string(Rational(1, 8), 2) == "0.13");
  CHECK(to_decimal_string(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal_string(Rational(5, 2), 0) == "3");
  CHECK(to_decimal_string(Rational(0), 4) == "0.0000");
}

TEST_CASE("exact square root to fixed decimals") {
  CHECK(sqrt_decimal_string(Rational(4), 6) == "2.000000");
  CHECK(sqrt_decimal_string(Rational(2), 12) == "1.414213562373");
  CHECK(sqrt_decimal_string(Rational(1, 4), 3) == "0.500");
  CHECK(sqrt_decimal_string(Rational(1, 3), 6) == "0.577350");
  CHECK(sqrt_decimal_string(Rational(0), 3) == "0.000");
  CHECK_THROWS_AS(sqrt_decimal_string(Rational(-1), 3), DomainError);
}

TEST_CASE("sqrt of a perfect square matches plain decimal formatting") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Rational r = abs(random_rational(rng, 50, 50));
    CHECK(sqrt_decimal_string(r * r, 9) == to_decimal_string(r, 9));
  }
}
