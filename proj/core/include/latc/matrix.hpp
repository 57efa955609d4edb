#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "latc/errors.hpp"
#include "latc/rational.hpp"

namespace latc {

// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw InvalidArgument("matrix entry count does not match its shape");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& columns,
                             std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw InvalidArgument("column length mismatch");
      }
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  const std::vector<T>& entries() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    T acc;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
        c(i, j) = acc;
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> x) {
    if (a.cols_ != x.size()) throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T acc = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * x[k];
      y[i] = acc;
    }
    return y;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    return a * std::span<const T>(x);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

RationalMatrix to_rational(const IntegerMatrix& m);
bool is_integral(const RationalMatrix& m);
IntegerMatrix to_integer(const RationalMatrix& m);

// Mixed products used on hot paths.
RatVector multiply(const RationalMatrix& a, std::span<const Integer> x);
RatVector multiply(const RationalMatrix& a, std::span<const Rational> x);
IntVector multiply(const IntegerMatrix& a, std::span<const Integer> x);
// x^T a, i.e. the row combination.
IntVector left_multiply(std::span<const Integer> x, const IntegerMatrix& a);

// x^T g y.
Rational bilinear(const RationalMatrix& g, std::span<const Integer> x,
                  std::span<const Integer> y);
Rational bilinear(const RationalMatrix& g, std::span<const Rational> x,
                  std::span<const Rational> y);

Rational det(const RationalMatrix& m);
// Fraction-free Bareiss elimination.
Integer det(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

// Throws SingularMatrixError when det(m) = 0.
RationalMatrix inverse(const RationalMatrix& m);
// Exact inverse of a unimodular integer matrix; NonUnimodularError otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);
RatVector solve(const RationalMatrix& m, std::span<const Rational> b);

bool is_symmetric(const RationalMatrix& m);

}  // namespace latc
