#include "divvol/rational.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace divvol {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double log_integer(const Integer& z) {
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.backend().data());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_or_fraction(const Rational& r) {
  Integer den = denominator(r);
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return to_string(r);

  const unsigned places = std::max(twos, fives);
  if (places == 0) return numerator(r).str();
  Integer scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  const Rational scaled_r = r * Rational(scale);
  Integer scaled = numerator(scaled_r);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

double log_rational(const Rational& r) {
  if (r <= 0) throw std::domain_error("log of nonpositive rational");
  return log_integer(numerator(r)) - log_integer(denominator(r));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r < 0) return false;
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (!mpz_perfect_square_p(num.backend().data()) ||
      !mpz_perfect_square_p(den.backend().data())) {
    return false;
  }
  root = Rational(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
  return true;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace divvol
