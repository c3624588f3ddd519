#include <doctest.h>

#include "cohere/error.hpp"
#include "cohere/rational.hpp"

using cohere::Rational;
using cohere::parse_rational;

TEST_CASE("parse_rational reads fractions, integers and decimals exactly") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(parse_rational("0.2") == Rational(1, 5));
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("1.") == Rational(1));
  CHECK(parse_rational("0.9") == Rational(9, 10));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), cohere::ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), cohere::ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), cohere::ParseError);
  CHECK_THROWS_AS(parse_rational("1e-3"), cohere::ParseError);
  CHECK_THROWS_AS(parse_rational("."), cohere::ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), cohere::ParseError);
}

TEST_CASE("rendering") {
  CHECK(cohere::to_string(Rational(2, 3)) == "2/3");
  CHECK(cohere::to_string(parse_rational("4/2")) == "2");
  CHECK(cohere::to_string(Rational(0)) == "0");
  CHECK(cohere::to_fraction(Rational(0)) == "0/1");
  CHECK(cohere::to_fraction(parse_rational("-6/4")) == "-3/2");
  CHECK(cohere::to_decimal(Rational(2, 3)) == "0.666667");
  CHECK(cohere::to_decimal(Rational(1, 8), 2) == "0.13");
  CHECK(cohere::to_decimal(Rational(1)) == "1.000000");
}

TEST_CASE("require_unit") {
  CHECK_NOTHROW(cohere::require_unit(Rational(0)));
  CHECK_NOTHROW(cohere::require_unit(Rational(1)));
  CHECK_THROWS_AS(cohere::require_unit(Rational(3, 2)), std::domain_error);
  CHECK_THROWS_AS(cohere::require_unit(Rational(-1, 2)), std::domain_error);
}
