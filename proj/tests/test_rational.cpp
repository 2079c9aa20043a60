#include "doctest.h"
#include "persuasion/errors.hpp"
#include "persuasion/rational.hpp"

using persuasion::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, 7).str() == "0");
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 10) * Rational(10, 19) == Rational(1, 19));
  CHECK(Rational(1) - Rational(19, 20) == Rational(1, 20));
  CHECK(Rational(9, 400) / Rational(3, 20) == Rational(3, 20));
  CHECK(Rational(1, 3) < Rational(34, 100));
  // Recomputing along a different route yields the identical canonical form.
  Rational a = (Rational(1, 7) + Rational(1, 7)) * Rational(7, 2);
  CHECK(a == Rational(1));
  CHECK(a.str() == "1");
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("0.18") == Rational(9, 50));
  CHECK(Rational::parse("-.5") == Rational(-1, 2));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("2.") == Rational(2));
  CHECK(Rational::parse("10/4") == Rational(5, 2));

  CHECK_THROWS_AS(Rational::parse(""), persuasion::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), persuasion::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), persuasion::ParseError);
  CHECK_THROWS_AS(Rational::parse("1e5"), persuasion::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), persuasion::ParseError);
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), persuasion::DomainError);
  CHECK_THROWS_AS(Rational(1, 0), persuasion::DomainError);
}
