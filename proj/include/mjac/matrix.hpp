#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "mjac/error.hpp"
#include "mjac/integer.hpp"

namespace mjac {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix without_row(std::size_t r) const {
    Matrix out(rows_ - 1, cols_);
    for (std::size_t i = 0, k = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(i, j);
      ++k;
    }
    return out;
  }
  Matrix without_col(std::size_t c) const {
    Matrix out(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0, k = 0; j < cols_; ++j) {
        if (j == c) continue;
        out(i, k++) = (*this)(i, j);
      }
    return out;
  }

  /// Submatrix keeping the listed columns, in the listed order.
  Matrix select_cols(std::span<const std::size_t> keep) const {
    Matrix out(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < keep.size(); ++k) out(i, k) = (*this)(i, keep[k]);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<int>;
using BigMatrix = Matrix<Integer>;

BigMatrix to_big(const IntMatrix& a);

/// Exact determinant by Bareiss fraction-free elimination. 0x0 has det 1.
Integer determinant(BigMatrix a);

/// Exact rank by fraction-free elimination.
std::size_t exact_rank(BigMatrix a);

/// a * b.
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);

}  // namespace mjac
