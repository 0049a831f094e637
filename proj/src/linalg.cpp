#include "divvol/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace divvol {

Matrix::Matrix(const std::vector<RationalVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

bool Matrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Matrix Matrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  Matrix out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      out(i, j) = (*this)(indices[i], indices[j]);
    }
  }
  return out;
}

RationalVector Matrix::multiply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

// Removes the listed rows/columns from a square matrix.
Matrix drop(const Matrix& m, std::size_t a, std::size_t b) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != a && i != b) keep.push_back(i);
  }
  return m.principal_submatrix(keep);
}

}  // namespace

Inertia inertia(Matrix m) {
  if (!m.symmetric()) throw std::invalid_argument("inertia of non-symmetric matrix");
  Inertia out;
  while (m.rows() > 0) {
    const std::size_t n = m.rows();
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, i) != 0) { pivot = i; break; }
    }
    if (pivot < n) {
      const Rational d = m(pivot, pivot);
      (d > 0 ? out.positive : out.negative) += 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == pivot || m(i, pivot) == 0) continue;
        const Rational f = m(i, pivot) / d;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == pivot) continue;
          m(i, j) -= f * m(pivot, j);
        }
      }
      m = drop(m, pivot, pivot);
      continue;
    }

    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m(i, j) != 0) { p = i; q = j; break; }
      }
    }
    if (p == n) {
      out.zero += n;
      break;
    }
    // Schur complement of [[0,b],[b,0]]; its inverse is [[0,1/b],[1/b,0]].
    const Rational b = m(p, q);
    out.positive += 1;
    out.negative += 1;
    Matrix next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        next(i, j) = m(i, j) - (m(i, p) * m(q, j) + m(i, q) * m(p, j)) / b;
      }
    }
    m = drop(next, p, q);
  }
  return out;
}

bool negative_definite(const Matrix& m) {
  if (m.rows() == 0) return true;
  return inertia(m).negative == m.rows();
}

std::optional<RationalVector> solve(Matrix m, RationalVector rhs) {
  const std::size_t n = m.rows();
  if (!m.square() || rhs.size() != n) throw std::invalid_argument("solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
      rhs[i] -= f * rhs[col];
    }
  }
  RationalVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) acc -= m(k, j) * x[j];
    x[k] = acc / m(k, k);
  }
  return x;
}

}  // namespace divvol
