#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "stpq/rational.hpp"

namespace stpq {

/// Dense row-major matrix of exact rationals. Dimensions are at least 1x1.
/// All operations are pure: they never mutate their inputs.
class Matrix {
public:
  /// Zero-filled m x n matrix.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t k);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Reduced row/column shape ratio mu = mu_y/mu_x; classifies which
/// cross-dimensional family a matrix belongs to.
class ShapeRatio {
public:
  ShapeRatio(std::size_t mu_y, std::size_t mu_x);

  static ShapeRatio of(const Matrix& a) { return {a.rows(), a.cols()}; }

  std::size_t mu_y() const { return mu_y_; }
  std::size_t mu_x() const { return mu_x_; }

  ShapeRatio reciprocal() const { return {mu_x_, mu_y_}; }
  std::string to_string() const;

  friend bool operator==(const ShapeRatio&, const ShapeRatio&) = default;

private:
  std::size_t mu_y_;
  std::size_t mu_x_;
};

std::ostream& operator<<(std::ostream& os, const ShapeRatio& mu);

Matrix identity(std::size_t k);

/// Kronecker product: entry (i*p + r, j*q + s) is a(i,j) * b(r,s).
Matrix kron(const Matrix& a, const Matrix& b);

/// Conventional matrix product; cols(a) must equal rows(b).
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scale(const Rational& r, const Matrix& a);

Matrix transpose(const Matrix& a);

/// Trace; requires a square matrix.
Rational trace(const Matrix& a);

/// Sum of entrywise products; dimensions must match.
Rational frobenius_inner(const Matrix& a, const Matrix& b);

/// frobenius_inner(a, a); exact, so the square root is never taken here.
Rational frobenius_norm_sq(const Matrix& a);

/// The k x k submatrix at block position (bi, bj), 0-based; k must divide
/// both dimensions.
Matrix block(const Matrix& a, std::size_t bi, std::size_t bj, std::size_t k);

std::ostream& operator<<(std::ostream& os, const Matrix& a);

} // namespace stpq
