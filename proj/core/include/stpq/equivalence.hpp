#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "stpq/matrix.hpp"

namespace stpq {

/// a = kron(divisor, identity(multiplicity)), with divisor irreducible when
/// produced by root().
struct Factorization {
  Matrix divisor;
  std::size_t multiplicity;
};

/// If k divides both dimensions of a and every k x k block of a is a scalar
/// multiple of I_k, returns the matrix of block scalars b with
/// a = kron(b, identity(k)). Absence is a valid answer, not an error.
std::optional<Matrix> is_multiple(const Matrix& a, std::size_t k);

/// Factors a into its irreducible root element and the maximal identity
/// multiplicity: a = kron(root, I_k) with no further reduction possible.
/// Candidates are scanned over the common divisors of (rows, cols) in
/// decreasing order; the first hit is the maximal one.
Factorization root(const Matrix& a);

/// Shape ratio mu and component index k with rows = k*mu_y, cols = k*mu_x.
std::pair<ShapeRatio, std::size_t> classify(const Matrix& a);

/// The component index k of a within its shape-ratio family
/// (= gcd(rows, cols), since mu is reduced).
std::size_t component_index(const Matrix& a);

/// True iff identity lifts exist with kron(a, I_alpha) = kron(b, I_beta).
/// Decided through root equality.
bool equivalent(const Matrix& a, const Matrix& b);

/// Same relation decided directly: lift both operands to their least common
/// shape and compare entrywise. Kept as an independent route for
/// cross-checking against the root-based test.
bool equivalent_by_minimal_lift(const Matrix& a, const Matrix& b);

/// Least common multiple Theta = kron(a, I_alpha) = kron(b, I_beta) with
/// alpha and beta coprime; empty when a and b are not equivalent.
std::optional<Matrix> theta(const Matrix& a, const Matrix& b);

/// Greatest common divisor Lambda with a = kron(Lambda, I_beta) and
/// b = kron(Lambda, I_alpha) for the same coprime alpha, beta as theta();
/// empty when not equivalent. Equals kron(common root, I_g) where g is the
/// gcd of the two root multiplicities.
std::optional<Matrix> lambda_gcd(const Matrix& a, const Matrix& b);

/// Equivalence class of a matrix, stored canonically by its irreducible
/// root element. Equality of classes is structural equality of roots.
class MatrixClass {
public:
  explicit MatrixClass(const Matrix& representative);

  const Matrix& root() const { return root_; }
  const ShapeRatio& shape_ratio() const { return ratio_; }

  /// Component index of the root; minimal over the whole class.
  std::size_t root_index() const { return root_index_; }

  bool is_zero() const { return root_.is_zero(); }

  friend bool operator==(const MatrixClass& a, const MatrixClass& b) {
    return a.root_ == b.root_;
  }

private:
  Matrix root_;
  ShapeRatio ratio_;
  std::size_t root_index_;
};

/// Natural projection of a matrix onto its equivalence class.
MatrixClass class_of(const Matrix& a);

} // namespace stpq
