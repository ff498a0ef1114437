#include "stpq/projection.hpp"

#include <numeric>

#include "stpq/random.hpp"

namespace stpq {

namespace {

struct ProjectionWork {
  Matrix lifted;    // root (x) I_{t/beta}, at component index t
  Matrix minimizer; // C, at component index alpha
  std::size_t lift_index;
  std::size_t block_size;
};

ProjectionWork compute_minimizer(const MatrixClass& x, std::size_t alpha) {
  if (alpha == 0) {
    throw DomainError("project: target index must be positive");
  }
  const std::size_t beta = x.root_index();
  const std::size_t t = std::lcm(alpha, beta);
  const std::size_t k = t / alpha;

  const Matrix lifted =
      t == beta ? x.root() : kron(x.root(), identity(t / beta));

  const std::size_t block_rows = lifted.rows() / k; // alpha * mu_y
  const std::size_t block_cols = lifted.cols() / k; // alpha * mu_x
  Matrix minimizer(block_rows, block_cols);
  const Rational inv_k(1, static_cast<long>(k));
  for (std::size_t i = 0; i < block_rows; ++i) {
    for (std::size_t j = 0; j < block_cols; ++j) {
      minimizer(i, j) = trace(block(lifted, i, j, k)) * inv_k;
    }
  }
  return {lifted, minimizer, t, k};
}

} // namespace

ProjectionResult project(const MatrixClass& x, std::size_t target_index) {
  ProjectionWork w = compute_minimizer(x, target_index);
  const Matrix residual_lifted =
      w.block_size == 1 ? w.lifted - w.minimizer
                        : w.lifted - kron(w.minimizer, identity(w.block_size));
  MatrixClass residual(residual_lifted);
  Rational dist_sq = norm_sq(residual);
  return {MatrixClass(w.minimizer), std::move(residual), target_index,
          w.lift_index,             w.block_size,        std::move(dist_sq)};
}

Matrix residual_matrix(const MatrixClass& x, std::size_t target_index) {
  const ProjectionWork w = compute_minimizer(x, target_index);
  return w.block_size == 1
             ? w.lifted - w.minimizer
             : w.lifted - kron(w.minimizer, identity(w.block_size));
}

bool verify_minimality(const MatrixClass& x, std::size_t target_index,
                       std::size_t trials, std::uint64_t seed) {
  const ProjectionResult best = project(x, target_index);
  const std::size_t rows = target_index * x.shape_ratio().mu_y();
  const std::size_t cols = target_index * x.shape_ratio().mu_x();

  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(seed + i);
    const MatrixClass competitor(random_matrix(rng, rows, cols));
    const Rational d = distance_sq(x, competitor);
    if (d < best.distance_sq_to_target) {
      return false;
    }
    if (d == best.distance_sq_to_target && !(competitor == best.projection)) {
      return false;
    }
  }
  return true;
}

} // namespace stpq
