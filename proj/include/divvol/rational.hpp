#pragma once

// Exact rational scalars shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace divvol {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using RationalVector = std::vector<Rational>;

// Parses "p" or "p/q" where only p may carry a sign. Throws std::invalid_argument
// on malformed text or q = 0.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& r);

// Terminating decimal when the denominator is 2^a 5^b, otherwise "p/q".
std::string to_decimal_or_fraction(const Rational& r);

// Natural log of a positive rational, robust for numerators and denominators
// far outside the double range.
double log_rational(const Rational& r);

double to_double(const Rational& r);

// Exact square root if r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace divvol
