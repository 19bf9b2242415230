#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

#include "halfflat/errors.hpp"

namespace halfflat {

template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) fail(errc::dimension_mismatch, "matrix product shape");
    Matrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        for (size_t j = 0; j < other.cols_; ++j) out(i, j) = out(i, j) + x * other(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& other) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
  }

  Matrix operator-(const Matrix& other) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix submatrix(size_t nrows, size_t ncols) const {
    Matrix out(nrows, ncols);
    for (size_t i = 0; i < nrows; ++i)
      for (size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  T trace() const {
    T t{};
    for (size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) fail(errc::dimension_mismatch, "matrix apply shape");
    std::vector<T> out(rows_, T{});
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

namespace detail {

template <class F>
bool entry_is_zero(const F& x) {
  if constexpr (std::is_floating_point_v<F>)
    return x == F(0);
  else
    return is_zero(x);
}

} // namespace detail

// Fraction-free (Bareiss) elimination.  Returns the rank; when `det` is
// given and the matrix is square of full rank, *det receives the exact
// determinant.  Intermediate entries stay determinants of minors, which
// keeps coefficient growth polynomial on exact fields.
template <class F>
size_t bareiss_rank(Matrix<F> m, F* det = nullptr) {
  size_t rows = m.rows(), cols = m.cols();
  size_t rank = 0;
  F prev_pivot{1};
  int swap_sign = 1;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && detail::entry_is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
      swap_sign = -swap_sign;
    }
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j)
        m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)) / prev_pivot;
      m(i, col) = F{};
    }
    prev_pivot = m(rank, col);
    ++rank;
  }
  if (det) {
    if (m.rows() != m.cols()) fail(errc::dimension_mismatch, "determinant of non-square matrix");
    if (rank < m.rows())
      *det = F{};
    else
      *det = (swap_sign > 0) ? prev_pivot : -prev_pivot;
  }
  return rank;
}

template <class F>
F determinant(const Matrix<F>& m) {
  F det{};
  bareiss_rank(m, &det);
  return det;
}

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<size_t> rref(Matrix<F>& m) {
  size_t rows = m.rows(), cols = m.cols();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && detail::entry_is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(row, j));
    F inv = F{1} / m(row, col);
    for (size_t j = col; j < cols; ++j) m(row, j) = m(row, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || detail::entry_is_zero(m(i, col))) continue;
      F factor = m(i, col);
      for (size_t j = col; j < cols; ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Echelon-normalized kernel basis: one vector per free column, carrying 1 at
// its free column and 0 at every other free column.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
  size_t cols = m.cols();
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<F> v(cols, F{});
    v[free_col] = F{1};
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves m x = rhs exactly; absent when inconsistent.  Free variables are 0.
template <class F>
std::optional<std::vector<F>> solve_linear(Matrix<F> m, const std::vector<F>& rhs) {
  if (rhs.size() != m.rows()) fail(errc::dimension_mismatch, "solve shape");
  size_t rows = m.rows(), cols = m.cols();
  Matrix<F> aug(rows, cols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = rhs[i];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt; // 0 = 1 row
  std::vector<F> x(cols, F{});
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols);
  return x;
}

template <class F>
size_t rank_of(const Matrix<F>& m) {
  return bareiss_rank(m);
}

// Span dimension of a list of vectors.
template <class F>
size_t span_rank(const std::vector<std::vector<F>>& vecs, size_t dim) {
  Matrix<F> m(vecs.size(), dim);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
  return bareiss_rank(m);
}

// Positive definiteness of a symmetric matrix via the exact signs of the
// leading principal minors.
template <class F>
bool positive_definite(const Matrix<F>& m) {
  for (size_t k = 1; k <= m.rows(); ++k) {
    F minor = determinant(m.submatrix(k, k));
    if (sign(minor) <= 0) return false;
  }
  return true;
}

} // namespace halfflat
