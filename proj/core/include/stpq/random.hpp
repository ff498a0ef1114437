#pragma once

#include <cstdint>
#include <random>

#include "stpq/matrix.hpp"

namespace stpq {

/// Uniform draw from [lo, hi] that depends only on the engine state, not on
/// the standard library's distribution implementation, so seeded sequences
/// are reproducible everywhere.
long bounded_draw(std::mt19937_64& rng, long lo, long hi);

/// Random reduced fraction with |numerator| <= num_max and
/// 1 <= denominator <= den_max before reduction.
Rational random_rational(std::mt19937_64& rng, long num_max, long den_max);

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                     long num_max = 10, long den_max = 10);

/// Random reduced shape ratio with mu_y <= max_mu_y, mu_x <= max_mu_x.
ShapeRatio random_ratio(std::mt19937_64& rng, std::size_t max_mu_y,
                        std::size_t max_mu_x);

/// Random matrix in the component of the given ratio at the given index,
/// i.e. of size (index * mu_y) x (index * mu_x).
Matrix random_component_matrix(std::mt19937_64& rng, const ShapeRatio& ratio,
                               std::size_t index, long num_max = 10,
                               long den_max = 10);

} // namespace stpq
