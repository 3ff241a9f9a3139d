#ifndef MVSLICE_MATRIX_HPP
#define MVSLICE_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvslice/errors.hpp"
#include "mvslice/partition.hpp"
#include "mvslice/rational.hpp"

namespace mvslice {

/// Dense row-major matrix over a commutative ring T (T must be constructible
/// from int). Value semantics; empty (0×n, n×0) matrices are valid.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
    Matrix out(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionMismatch("column has wrong length");
      for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
    }
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw DimensionMismatch("block out of range");
    Matrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    }
    return out;
  }

  /// Top-left n×n submatrix.
  Matrix leading(std::size_t n) const { return block(0, 0, n, n); }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!(x == T(0))) return false;
    }
    return true;
  }

  bool is_strictly_upper() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j <= i && j < cols_; ++j) {
        if (!((*this)(i, j) == T(0))) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out(a);
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out(a);
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;

/// M^p for p ≥ 0, with M^0 the identity.
template <typename T>
Matrix<T> power(const Matrix<T>& m, int p) {
  if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
  if (p < 0) throw std::invalid_argument("negative matrix power");
  Matrix<T> out = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (p > 0) {
    if (p & 1) out = out * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return out;
}

/// Upper-triangular Jordan normal form J_ν: blocks of sizes ν_1, ν_2, … down
/// the diagonal, ones on the superdiagonal inside each block.
inline RatMatrix jordan_matrix(const std::vector<int>& block_sizes) {
  int n = 0;
  for (int s : block_sizes) {
    if (s < 0) throw std::invalid_argument("negative Jordan block size");
    n += s;
  }
  RatMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t offset = 0;
  for (int s : block_sizes) {
    for (int k = 0; k + 1 < s; ++k) out(offset + k, offset + k + 1) = 1;
    offset += static_cast<std::size_t>(s);
  }
  return out;
}

inline RatMatrix jordan_matrix(const Partition& nu) { return jordan_matrix(nu.parts()); }

}  // namespace mvslice

#endif  // MVSLICE_MATRIX_HPP
