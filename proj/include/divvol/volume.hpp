#pragma once

#include "divvol/lattice.hpp"

#include <string>

namespace divvol {

// Numbers s_k = int alpha^k . omega^(n-k), k = 0..n, for a nef alpha and a
// Kahler omega on an n-dimensional manifold.
class NefIntersectionTable {
public:
  // Requires n >= 1, s.size() == n + 1 and s_0 > 0.
  NefIntersectionTable(int n, RationalVector s);

  int dimension() const { return n_; }
  const RationalVector& s() const { return s_; }
  const Rational& s(int k) const { return s_[static_cast<std::size_t>(k)]; }

private:
  int n_;
  RationalVector s_;
};

// Induced table of (a, w) on a surface: (w^2, a.w, a^2).
NefIntersectionTable surface_table(const SurfaceLattice& lattice, const DivisorClass& a,
                                   const DivisorClass& w);

// sum_j c_j t^j
class VolumePolynomial {
public:
  VolumePolynomial() = default;
  explicit VolumePolynomial(RationalVector coefficients);

  const RationalVector& coefficients() const { return c_; }
  Rational coefficient(std::size_t j) const { return j < c_.size() ? c_[j] : Rational(0); }
  // -1 for the zero polynomial.
  int degree() const;
  Rational operator()(const Rational& t) const;
  // Smallest j with c_j != 0, -1 for the zero polynomial.
  int order() const;

  friend bool operator==(const VolumePolynomial&, const VolumePolynomial&) = default;

private:
  RationalVector c_;  // trailing zeros trimmed
};

// e.g. "2t + 3t^2", "-1 + t^2", "(1/2)t^3", "0".
std::string to_string(const VolumePolynomial& p);

// vol(alpha + t omega) = sum_k binom(n,k) s_k t^(n-k). Entries with s_k < 0 are
// expanded formally.
VolumePolynomial nef_polynomial(const NefIntersectionTable& table);

// Largest k with s_k != 0.
int nd_nef(const NefIntersectionTable& table);

// P^2 of the Zariski positive part; 0 for classes that are not pseudoeffective.
Rational vol_surface(const SurfaceLattice& lattice, const DivisorClass& a);

// 2 if big, 1 if the positive part is nonzero, 0 otherwise. Throws
// std::invalid_argument for classes that are not pseudoeffective.
int nd_surface(const SurfaceLattice& lattice, const DivisorClass& a);

}  // namespace divvol
