#include "stpq/random.hpp"

#include <numeric>

namespace stpq {

long bounded_draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

Rational random_rational(std::mt19937_64& rng, long num_max, long den_max) {
  const long num = bounded_draw(rng, -num_max, num_max);
  const long den = bounded_draw(rng, 1, den_max);
  return {num, den};
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                     long num_max, long den_max) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = random_rational(rng, num_max, den_max);
    }
  }
  return out;
}

ShapeRatio random_ratio(std::mt19937_64& rng, std::size_t max_mu_y,
                        std::size_t max_mu_x) {
  for (;;) {
    const auto y = static_cast<std::size_t>(
        bounded_draw(rng, 1, static_cast<long>(max_mu_y)));
    const auto x = static_cast<std::size_t>(
        bounded_draw(rng, 1, static_cast<long>(max_mu_x)));
    if (std::gcd(y, x) == 1) {
      return {y, x};
    }
  }
}

Matrix random_component_matrix(std::mt19937_64& rng, const ShapeRatio& ratio,
                               std::size_t index, long num_max, long den_max) {
  return random_matrix(rng, index * ratio.mu_y(), index * ratio.mu_x(), num_max,
                       den_max);
}

} // namespace stpq
