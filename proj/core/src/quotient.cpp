#include "stpq/quotient.hpp"

#include <numeric>

namespace stpq {

namespace {

void require_same_ratio(const Matrix& a, const Matrix& b, const char* op) {
  const ShapeRatio ra = ShapeRatio::of(a);
  const ShapeRatio rb = ShapeRatio::of(b);
  if (ra != rb) {
    throw DomainError(std::string(op) + ": different shape-ratio components, " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " (mu=" + ra.to_string() + ") vs " +
                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                      " (mu=" + rb.to_string() + ")");
  }
}

Matrix lift_to(const Matrix& a, std::size_t t) {
  const std::size_t k = component_index(a);
  return t == k ? a : kron(a, identity(t / k));
}

} // namespace

Matrix lplus(const Matrix& a, const Matrix& b) {
  require_same_ratio(a, b, "lplus");
  const std::size_t t = std::lcm(component_index(a), component_index(b));
  return lift_to(a, t) + lift_to(b, t);
}

Matrix lminus(const Matrix& a, const Matrix& b) {
  require_same_ratio(a, b, "lminus");
  const std::size_t t = std::lcm(component_index(a), component_index(b));
  return lift_to(a, t) - lift_to(b, t);
}

Rational weighted_inner(const Matrix& a, const Matrix& b) {
  require_same_ratio(a, b, "weighted inner product");
  const std::size_t t = std::lcm(component_index(a), component_index(b));
  return frobenius_inner(lift_to(a, t), lift_to(b, t)) /
         Rational(static_cast<long>(t));
}

Rational weighted_norm_sq(const Matrix& a) {
  return frobenius_norm_sq(a) / Rational(static_cast<long>(component_index(a)));
}

MatrixClass class_add(const MatrixClass& x, const MatrixClass& y) {
  require_same_ratio(x.root(), y.root(), "class add");
  return MatrixClass(lplus(x.root(), y.root()));
}

MatrixClass class_sub(const MatrixClass& x, const MatrixClass& y) {
  require_same_ratio(x.root(), y.root(), "class subtract");
  return MatrixClass(lminus(x.root(), y.root()));
}

MatrixClass class_scale(const Rational& r, const MatrixClass& x) {
  return MatrixClass(scale(r, x.root()));
}

Rational class_inner(const MatrixClass& x, const MatrixClass& y) {
  require_same_ratio(x.root(), y.root(), "class inner product");
  return weighted_inner(x.root(), y.root());
}

Rational norm_sq(const MatrixClass& x) { return weighted_norm_sq(x.root()); }

Rational distance_sq(const MatrixClass& x, const MatrixClass& y) {
  require_same_ratio(x.root(), y.root(), "distance");
  return norm_sq(class_sub(x, y));
}

std::string norm_decimal(const MatrixClass& x, unsigned digits) {
  return sqrt_decimal_string(norm_sq(x), digits);
}

std::string distance_decimal(const MatrixClass& x, const MatrixClass& y,
                             unsigned digits) {
  return sqrt_decimal_string(distance_sq(x, y), digits);
}

MatrixClass transpose_class(const MatrixClass& x) {
  // The root of the transpose is the transposed root: kron(c, I_k)
  // transposes blockwise, so reducibility carries over unchanged.
  return MatrixClass(transpose(x.root()));
}

Matrix embed(const MatrixClass& x, std::size_t k) {
  if (k == 0) {
    throw DomainError("embed: lift index must be positive");
  }
  return k == 1 ? x.root() : kron(x.root(), identity(k));
}

MatrixClass convex_path(const MatrixClass& x, const MatrixClass& y,
                        const Rational& lambda) {
  if (lambda < Rational(0) || lambda > Rational(1)) {
    throw DomainError("convex path: lambda = " + lambda.to_string() +
                      " outside [0, 1]");
  }
  require_same_ratio(x.root(), y.root(), "convex path");
  return class_add(class_scale(lambda, x),
                   class_scale(Rational(1) - lambda, y));
}

} // namespace stpq
