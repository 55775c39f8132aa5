#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "msa/error.hpp"
#include "msa/scalar.hpp"

namespace msa {

/// Dense row-major matrix. Small by construction (frames are at most ~20x20),
/// so storage is a flat vector and all algorithms are textbook cubic ones.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix without_row(std::size_t skip) const {
    Matrix out(rows_ - 1, cols_);
    for (std::size_t r = 0, o = 0; r < rows_; ++r) {
      if (r == skip) continue;
      for (std::size_t c = 0; c < cols_; ++c) out(o, c) = (*this)(r, c);
      ++o;
    }
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;

/// Fraction-free Bareiss elimination. Every division is exact, so this works
/// for any integral domain T with exact `/` (integers, rationals).
template <typename T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return T(1);
  T sign(1);
  T previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == T(0)) ++swap;
      if (swap == n) return T(0);
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = T(0);
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(ScalarMatrix& m);

std::size_t rank(ScalarMatrix m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m);

/// Coefficients c_0..c_n of det(x I - m), c_n = 1 (Faddeev-LeVerrier).
std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& m);

/// Distinct rational roots of a polynomial given by ascending coefficients.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs);

/// Exact square root of a non-negative rational, if it is a perfect square.
bool rational_sqrt(const Scalar& value, Scalar& root);

}  // namespace msa
