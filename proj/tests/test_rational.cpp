#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "pcmax/rational.hpp"

using pcmax::Rational;

TEST_CASE("rational normalizes and prints") {
  CHECK(Rational(6, 8).to_string() == "3/4");
  CHECK(Rational(-6, -8).to_string() == "3/4");
  CHECK(Rational(6, -8).to_string() == "-3/4");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(10, 5).is_integer());
  std::ostringstream os;
  os << Rational(15, 13);
  CHECK(os.str() == "15/13");
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(4, 3) - Rational(1, 9) == Rational(11, 9));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(7, 6).reciprocal() == Rational(6, 7));
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(7, 6) < Rational(6, 5));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(16, 19) > Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3) >= Rational(3));
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(7, 2).ceil() == Rational(4));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(-7, 2).ceil() == Rational(-3));
  CHECK(Rational(6).floor() == Rational(6));
  CHECK(Rational(6).ceil() == Rational(6));
}

TEST_CASE("parse") {
  CHECK(Rational::parse("15/13") == Rational(15, 13));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("large values do not overflow") {
  Rational x(1);
  for (int i = 0; i < 100; ++i) x *= Rational(1'000'000'007, 3);
  for (int i = 0; i < 100; ++i) x /= Rational(1'000'000'007, 3);
  CHECK(x == Rational(1));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
