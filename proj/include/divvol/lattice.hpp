#pragma once

// Neron-Severi lattice of a surface: rational Gram matrix of signature
// (1, rank-1), a catalog of negative curves and a designated ample class.
//
// Curve-complete assumption: the catalog must list every irreducible curve
// class of negative self-intersection. The nef, pseudoeffective and bigness
// predicates downstream are exact only under this assumption; with a partial
// catalog they describe the cones generated by the curves that were supplied.

#include "divvol/linalg.hpp"
#include "divvol/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace divvol {

// Coordinates of a class in the lattice basis.
struct DivisorClass {
  RationalVector coords;

  DivisorClass() = default;
  explicit DivisorClass(RationalVector c) : coords(std::move(c)) {}
  DivisorClass(std::initializer_list<Rational> c) : coords(c) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(RationalVector(rank)); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(DivisorClass a, const DivisorClass& b);
DivisorClass operator-(DivisorClass a, const DivisorClass& b);
DivisorClass operator*(const Rational& s, DivisorClass a);

// "(p1, p2, ...)" with canonical rationals.
std::string to_string(const DivisorClass& a);

struct Curve {
  std::string name;
  DivisorClass cls;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* find(const std::string& name) const;
};

class SurfaceLattice {
public:
  // Shape errors (non-square Gram, class lengths != rank) throw
  // std::invalid_argument. Geometric invariants are left to validate().
  SurfaceLattice(std::string name, Matrix gram, std::vector<Curve> curves, DivisorClass ample);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<Curve>& curves() const { return curves_; }
  const Curve& curve(std::size_t i) const { return curves_[i]; }
  const DivisorClass& ample() const { return ample_; }

  // Gram matrix of the catalog curves with the given indices.
  Matrix curve_gram(const std::vector<std::size_t>& indices) const;

private:
  std::string name_;
  Matrix gram_;
  std::vector<Curve> curves_;
  DivisorClass ample_;
};

// a^T G b. Throws std::invalid_argument on dimension mismatch.
Rational dot(const SurfaceLattice& lattice, const DivisorClass& a, const DivisorClass& b);

inline Rational square(const SurfaceLattice& lattice, const DivisorClass& a) {
  return dot(lattice, a, a);
}

// Check names: "symmetry", "signature", "ample-positive",
// "curve-self-intersection", "curve-ample", "curve-intersections".
ValidationReport validate(const SurfaceLattice& lattice);

}  // namespace divvol
