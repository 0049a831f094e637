#include "divvol/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace divvol;

TEST_CASE("parse_rational accepts integers and reduced or unreduced fractions") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(parse_rational("0/5") == 0);
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rational(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"1/0", "1/-2", "--1", "", "a", "1.5", "1/", "/2", " 1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("decimal rendering terminates only for 2^a 5^b denominators") {
  CHECK(to_decimal_or_fraction(Rational(1, 4)) == "0.25");
  CHECK(to_decimal_or_fraction(Rational(-1, 8)) == "-0.125");
  CHECK(to_decimal_or_fraction(Rational(3, 2)) == "1.5");
  CHECK(to_decimal_or_fraction(Rational(7, 20)) == "0.35");
  CHECK(to_decimal_or_fraction(Rational(5)) == "5");
  CHECK(to_decimal_or_fraction(Rational(0)) == "0");
  CHECK(to_decimal_or_fraction(Rational(1, 3)) == "1/3");
  CHECK(to_decimal_or_fraction(Rational(1, 1048576)) == "0.00000095367431640625");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("log_rational handles values outside the double range") {
  CHECK(log_rational(Rational(1, 1048576)) == doctest::Approx(-20 * std::log(2.0)));
  Integer big = 1;
  for (int i = 0; i < 400; ++i) big *= 10;
  CHECK(log_rational(Rational(big, 3)) == doctest::Approx(400 * std::log(10.0) - std::log(3.0)));
  CHECK_THROWS(log_rational(Rational(0)));
}

TEST_CASE("rational_sqrt is exact") {
  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-4), root));
  CHECK(divvol::pow(Rational(1, 2), 3) == Rational(1, 8));
}
