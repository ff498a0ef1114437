#pragma once

#include <string>

#include "stpq/equivalence.hpp"

namespace stpq {

/// Cross-dimensional addition within one shape-ratio family: both operands
/// are lifted to the lcm component, then added there. The result lives at
/// the lifted size and is not canonicalized.
Matrix lplus(const Matrix& a, const Matrix& b);

/// lplus(a, -b).
Matrix lminus(const Matrix& a, const Matrix& b);

/// Size-independent inner product: with component indices alpha, beta and
/// t = lcm(alpha, beta),
///   (a | b)_W = (1/t) * frobenius_inner(a (x) I_{t/alpha}, b (x) I_{t/beta}).
/// Representative-independent, which is what makes the class inner product
/// below well defined.
Rational weighted_inner(const Matrix& a, const Matrix& b);

/// weighted_inner(a, a).
Rational weighted_norm_sq(const Matrix& a);

/// Class arithmetic: computed on the canonical roots, then re-canonicalized,
/// so equality stays structural and lift sizes do not grow across chains.
MatrixClass class_add(const MatrixClass& x, const MatrixClass& y);
MatrixClass class_sub(const MatrixClass& x, const MatrixClass& y);
MatrixClass class_scale(const Rational& r, const MatrixClass& x);

Rational class_inner(const MatrixClass& x, const MatrixClass& y);

Rational norm_sq(const MatrixClass& x);
Rational distance_sq(const MatrixClass& x, const MatrixClass& y);

/// Decimal approximations, emitted only at output boundaries; the exact
/// layer never takes square roots.
std::string norm_decimal(const MatrixClass& x, unsigned digits);
std::string distance_decimal(const MatrixClass& x, const MatrixClass& y,
                             unsigned digits);

/// The transpose isometry between the mu and 1/mu families; an involution.
MatrixClass transpose_class(const MatrixClass& x);

/// The representative kron(root, I_k) of x at k times the root's component
/// index; the induced embedding into higher components is isometric.
Matrix embed(const MatrixClass& x, std::size_t k);

/// lambda*x + (1-lambda)*y for lambda in [0, 1].
MatrixClass convex_path(const MatrixClass& x, const MatrixClass& y,
                        const Rational& lambda);

} // namespace stpq
