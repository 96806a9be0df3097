#include <doctest.h>

#include "depol/rational.hpp"

using depol::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("no overflow on large intermediates") {
  // repeated squaring blows past 64 bits quickly
  Rational x(7, 3);
  for (int i = 0; i < 8; ++i) x *= x;
  Rational y = x - x;
  CHECK(y.is_zero());
  CHECK((x / x) == Rational(1));
}

TEST_CASE("parse and render") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(1, 2).sign() == 1);
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}
