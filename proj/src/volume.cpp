#include "divvol/volume.hpp"

#include "divvol/zariski.hpp"

#include <stdexcept>

namespace divvol {

NefIntersectionTable::NefIntersectionTable(int n, RationalVector s) : n_(n), s_(std::move(s)) {
  if (n_ < 1) throw std::invalid_argument("table dimension must be positive");
  if (s_.size() != static_cast<std::size_t>(n_) + 1) {
    throw std::invalid_argument("table needs n + 1 = " + std::to_string(n_ + 1) +
                                " entries, got " + std::to_string(s_.size()));
  }
  if (s_[0] <= 0) throw std::invalid_argument("s_0 = omega^n must be positive");
}

NefIntersectionTable surface_table(const SurfaceLattice& lattice, const DivisorClass& a,
                                   const DivisorClass& w) {
  return NefIntersectionTable(2, {dot(lattice, w, w), dot(lattice, a, w), dot(lattice, a, a)});
}

VolumePolynomial::VolumePolynomial(RationalVector coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int VolumePolynomial::degree() const { return static_cast<int>(c_.size()) - 1; }

int VolumePolynomial::order() const {
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) return static_cast<int>(j);
  }
  return -1;
}

Rational VolumePolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t j = c_.size(); j-- > 0;) acc = acc * t + c_[j];
  return acc;
}

std::string to_string(const VolumePolynomial& p) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    Rational mag = abs(c[j]);
    if (out.empty()) {
      if (c[j] < 0) out += "-";
    } else {
      out += c[j] < 0 ? " - " : " + ";
    }
    std::string monomial = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
    if (j == 0) {
      out += to_string(mag);
    } else if (mag != 1) {
      out += denominator(mag) == 1 ? to_string(mag) : "(" + to_string(mag) + ")";
    }
    out += monomial;
  }
  return out.empty() ? "0" : out;
}

VolumePolynomial nef_polynomial(const NefIntersectionTable& table) {
  const int n = table.dimension();
  RationalVector c(static_cast<std::size_t>(n) + 1);
  Integer binom = 1;  // binom(n, k)
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(n - k)] = Rational(binom) * table.s(k);
    binom = binom * (n - k) / (k + 1);
  }
  return VolumePolynomial(std::move(c));
}

int nd_nef(const NefIntersectionTable& table) {
  for (int k = table.dimension(); k >= 0; --k) {
    if (table.s(k) != 0) return k;
  }
  return 0;
}

Rational vol_surface(const SurfaceLattice& lattice, const DivisorClass& a) {
  const auto r = decompose(lattice, a);
  if (const auto* z = std::get_if<ZariskiDecomposition>(&r)) {
    return square(lattice, z->positive);
  }
  return 0;
}

int nd_surface(const SurfaceLattice& lattice, const DivisorClass& a) {
  const auto z = decompose_or_throw(lattice, a);
  if (square(lattice, z.positive) > 0) return 2;
  return z.positive.is_zero() ? 0 : 1;
}

}  // namespace divvol
