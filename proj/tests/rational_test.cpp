// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "support.hpp"

using namespace ortho;
using ortho::test::R;

TEST_SUITE("rational") {
  TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-4, 8) == Rational(-1, 2));
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  }

  TEST_CASE("arithmetic is exact") {
    CHECK(R("1/3") + R("1/6") == R("1/2"));
    CHECK(R("1/3") - R("1/3") == Rational(0));
    CHECK(R("2/3") * R("9/4") == R("3/2"));
    CHECK(R("1/7") / R("2/7") == R("1/2"));
    CHECK(-R("5/3") == R("-5/3"));
    CHECK_THROWS_AS(R("1/2") / Rational(0), std::invalid_argument);

    Rational acc(0);
    for (int i = 0; i < 3000; ++i) acc += R("1/3000");
    CHECK(acc == Rational(1));
  }

  TEST_CASE("ordering") {
    CHECK(R("1/3") < R("1/2"));
    CHECK(R("-2") < R("-1/2"));
    CHECK(R("7/5") >= R("7/5"));
  }

  TEST_CASE("parse forms") {
    CHECK(R("7") == Rational(7));
    CHECK(R("-3/4") == Rational(-3, 4));
    CHECK(R("1.25") == Rational(5, 4));
    CHECK(R("-0.5") == Rational(-1, 2));
    CHECK(R("2e-3") == Rational(1, 500));
    CHECK(R("1.5e2") == Rational(150));
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("abc").has_value());
    CHECK_FALSE(Rational::parse("1/2/3").has_value());
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("1..2").has_value());
  }

  TEST_CASE("str round trip") {
    for (const char* s : {"0", "7", "-3/4", "22/7", "-1000000007/13"}) {
      CHECK(R(s).str() == s);
      std::ostringstream os;
      os << R(s);
      CHECK(os.str() == s);
    }
  }

  TEST_CASE("from_double is exact") {
    CHECK(Rational::from_double(0.5) == R("1/2"));
    CHECK(Rational::from_double(0.375) == R("3/8"));
    CHECK(Rational::from_double(R("1/3").to_double()).to_double() == R("1/3").to_double());
    CHECK_THROWS_AS(Rational::from_double(1.0 / 0.0), std::invalid_argument);
  }

  TEST_CASE("approximate by continued fractions") {
    CHECK(Rational::approximate(0.5, 1000000) == R("1/2"));
    CHECK(Rational::approximate(1.0 / 3.0, 1000000) == R("1/3"));
    CHECK(Rational::approximate(3.14159265358979, 1000) == R("355/113"));
    CHECK(Rational::approximate(2.0 / 7.0 + 1e-13, 1000000) == R("2/7"));
  }

  TEST_CASE("sqrt_exact") {
    CHECK(R("49/4").sqrt_exact() == R("7/2"));
    CHECK(Rational(25).sqrt_exact() == Rational(5));
    CHECK(Rational(0).sqrt_exact() == Rational(0));
    CHECK_FALSE(Rational(3).sqrt_exact().has_value());
    CHECK_FALSE(R("4/3").sqrt_exact().has_value());
    CHECK_FALSE(Rational(-4).sqrt_exact().has_value());
  }

  TEST_CASE("misc accessors") {
    CHECK(R("-3/4").abs() == R("3/4"));
    CHECK(R("-3/4").sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(R("5").is_integer());
    CHECK_FALSE(R("5/2").is_integer());
    CHECK(R("2/3").reciprocal() == R("3/2"));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::invalid_argument);
  }
}
