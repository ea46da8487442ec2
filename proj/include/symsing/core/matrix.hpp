#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symsing/core/cyclotomic.hpp"
#include "symsing/core/qsqrt2.hpp"
#include "symsing/core/rational.hpp"

namespace symsing {

/// Dense row-major matrix.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<K> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<K>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!symsing::is_zero(x)) return false;
    return true;
  }

  K trace() const {
    K t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (symsing::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const K& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + symsing::to_string((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

template <class K>
Matrix<K> commutator(const Matrix<K>& a, const Matrix<K>& b) {
  return a * b - b * a;
}

/// Reduced row echelon form over a field, in place.  Returns the pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    K inv = inverse(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      K f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Rank over the coefficient field by Gaussian elimination.
template <class K>
std::size_t rank_field(Matrix<K> m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    K inv = inverse(m(rank, col));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, col))) continue;
      K f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(rank, j))) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Basis of the right kernel {v : m v = 0}.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Fraction-free (Bareiss) rank of an integer matrix.  Reference implementation.
std::size_t rank_bareiss(ZMatrix m);

/// Exact rank of an integer matrix.  Small inputs go through Bareiss; larger ones through the
/// certified multimodular path (mod-p elimination plus an exact kernel certificate).
std::size_t exact_rank(const ZMatrix& m);
std::size_t exact_rank(const QMatrix& m);
std::size_t exact_rank(const Matrix<Cyclo>& m);
std::size_t exact_rank(const Matrix<QSqrt2>& m);

/// Multiplies each row by the lcm of its denominators.
ZMatrix clear_denominators(const QMatrix& m);

/// Rank through the multimodular path regardless of size; exposed for testing.
std::size_t certified_rank(const ZMatrix& m);

/// Determinant by Bareiss.
Integer determinant(ZMatrix m);

/// Solution of a x = b over Q if one exists.
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace symsing
