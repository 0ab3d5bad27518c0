#include <doctest.h>

#include <map>

#include "hgm/numbers.hpp"
#include "hgm/rational.hpp"

using namespace hgm;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
}

TEST_CASE("arithmetic and order") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK(Rational(-1, 3) < Rational(1, 6));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("frac") {
  CHECK(frac(Rational(5, 2)) == Rational(1, 2));
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac(Rational(3)) == Rational(0));
  // {r} + {-r} complements to 1 off the integers.
  CHECK(frac(Rational(-1, 3)) + frac(Rational(1, 3)) == Rational(1));
}

TEST_CASE("frac range and integrality") {
  for (long num = -20; num <= 20; ++num) {
    for (long den = 1; den <= 7; ++den) {
      Rational r(num, den);
      Rational f = frac(r);
      CHECK(f >= Rational(0));
      CHECK(f < Rational(1));
      CHECK((r - f).is_integer());
    }
  }
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(4).floor() == 4);
  CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("5/10") == Rational(1, 2));
  CHECK(Rational::parse(" -1/3 ") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("+5") == Rational(5));
  CHECK(Rational::parse("085396") == Rational(85396));
  CHECK(Rational::parse("007/010") == Rational(7, 10));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3).str() == "-3");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
}
