#pragma once

#include "divvol/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace divvol {

// Dense row-major matrix of rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit Matrix(const std::vector<RationalVector>& rows);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : Matrix(std::vector<RationalVector>(rows.begin(), rows.end())) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool symmetric() const;
  Matrix principal_submatrix(const std::vector<std::size_t>& indices) const;
  RationalVector multiply(const RationalVector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Sylvester inertia of a symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Congruence reduction: eliminates on a nonzero diagonal pivot when one exists,
// otherwise on a 2x2 block [[0,b],[b,0]] (which contributes one positive and one
// negative square). Requires a symmetric matrix.
Inertia inertia(Matrix m);

bool negative_definite(const Matrix& m);

// Unique solution of m x = rhs, or nullopt if m is singular.
std::optional<RationalVector> solve(Matrix m, RationalVector rhs);

}  // namespace divvol
