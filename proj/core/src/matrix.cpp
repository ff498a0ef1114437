#include "stpq/matrix.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace stpq {

namespace {

std::string dim_str(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string(op) + ": dimension mismatch, " + dim_str(a) +
                      " vs " + dim_str(b));
  }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DomainError("matrix: dimensions must be positive, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw DomainError("matrix: dimensions must be positive, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (entries_.size() != rows * cols) {
    throw DomainError("matrix: entry count " + std::to_string(entries_.size()) +
                      " does not fill " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() > 0 ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DomainError("matrix: dimensions must be positive");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DomainError("matrix: ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t k) {
  if (k == 0) {
    throw DomainError("identity: order must be positive");
  }
  Matrix eye(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    eye(i, i) = Rational(1);
  }
  return eye;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) {
      return false;
    }
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

ShapeRatio::ShapeRatio(std::size_t mu_y, std::size_t mu_x) {
  if (mu_y == 0 || mu_x == 0) {
    throw DomainError("shape ratio: components must be positive");
  }
  const std::size_t g = std::gcd(mu_y, mu_x);
  mu_y_ = mu_y / g;
  mu_x_ = mu_x / g;
}

std::string ShapeRatio::to_string() const {
  return std::to_string(mu_y_) + "/" + std::to_string(mu_x_);
}

std::ostream& operator<<(std::ostream& os, const ShapeRatio& mu) {
  return os << mu.to_string();
}

Matrix identity(std::size_t k) { return Matrix::identity(k); }

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  Matrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) {
        continue;
      }
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t s = 0; s < q; ++s) {
          if (!b(r, s).is_zero()) {
            out(i * p + r, j * q + s) = aij * b(r, s);
          }
        }
      }
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("matrix product: inner dimensions differ, " + dim_str(a) +
                      " times " + dim_str(b));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix add");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) + b(i, j);
    }
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix subtract");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) - b(i, j);
    }
  }
  return out;
}

Matrix operator-(const Matrix& a) { return scale(Rational(-1), a); }

Matrix scale(const Rational& r, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = r * a(i, j);
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = a(i, j);
    }
  }
  return out;
}

Rational trace(const Matrix& a) {
  if (!a.is_square()) {
    throw DomainError("trace: matrix is not square, " + dim_str(a));
  }
  Rational sum;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    sum += a(i, i);
  }
  return sum;
}

Rational frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "frobenius inner product");
  Rational sum;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (!a.entries()[k].is_zero() && !b.entries()[k].is_zero()) {
      sum += a.entries()[k] * b.entries()[k];
    }
  }
  return sum;
}

Rational frobenius_norm_sq(const Matrix& a) { return frobenius_inner(a, a); }

Matrix block(const Matrix& a, std::size_t bi, std::size_t bj, std::size_t k) {
  if (k == 0 || a.rows() % k != 0 || a.cols() % k != 0) {
    throw DomainError("block: size " + std::to_string(k) +
                      " does not divide matrix dimensions " + dim_str(a));
  }
  if (bi >= a.rows() / k || bj >= a.cols() / k) {
    throw DomainError("block: position (" + std::to_string(bi) + ", " +
                      std::to_string(bj) + ") out of range for " + dim_str(a) +
                      " split into " + std::to_string(k) + "x" +
                      std::to_string(k) + " blocks");
  }
  Matrix out(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      out(r, s) = a(bi * k + r, bj * k + s);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) {
        os << ' ';
      }
      os << a(i, j);
    }
    if (i + 1 < a.rows()) {
      os << '\n';
    }
  }
  return os;
}

} // namespace stpq
