#pragma once

#include <cstdint>

#include "stpq/quotient.hpp"

namespace stpq {

/// Orthogonal projection of a class onto the target component, with the
/// residual class and diagnostics. Invariants (both exact):
///   class_inner(projection, residual) = 0
///   norm_sq(original) = norm_sq(projection) + norm_sq(residual)
struct ProjectionResult {
  MatrixClass projection;
  MatrixClass residual;
  std::size_t target_index; // alpha
  std::size_t lift_index;   // t = lcm(alpha, root index)
  std::size_t block_size;   // k = t / alpha
  Rational distance_sq_to_target;
};

/// Nearest point to x among classes of matrices in the target component:
/// the root is lifted to the common component t, split into k x k blocks,
/// and each block contributes trace(block)/k as one minimizer entry.
ProjectionResult project(const MatrixClass& x, std::size_t target_index);

/// The explicit lifted residual at common size t:
///   E = (root (x) I_{t/beta}) - (C (x) I_k).
Matrix residual_matrix(const MatrixClass& x, std::size_t target_index);

/// Randomized exact certificate that no competitor in the target component
/// comes closer to x than the projection: `trials` seeded random matrices
/// are tested, with equality tolerated only for the projection itself.
/// Trial i draws from a generator seeded with seed + i, so results do not
/// depend on evaluation order.
bool verify_minimality(const MatrixClass& x, std::size_t target_index,
                       std::size_t trials, std::uint64_t seed = 0);

} // namespace stpq
