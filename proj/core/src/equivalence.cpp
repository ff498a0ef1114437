#include "stpq/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace stpq {

namespace {

// Divisors of n in decreasing order.
std::vector<std::size_t> divisors_desc(std::size_t n) {
  std::vector<std::size_t> divs;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) {
        divs.push_back(n / d);
      }
    }
  }
  std::sort(divs.rbegin(), divs.rend());
  return divs;
}

} // namespace

std::optional<Matrix> is_multiple(const Matrix& a, std::size_t k) {
  if (k == 0 || a.rows() % k != 0 || a.cols() % k != 0) {
    return std::nullopt;
  }
  if (k == 1) {
    return a;
  }
  const std::size_t m = a.rows() / k;
  const std::size_t n = a.cols() / k;
  Matrix quotient(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& diag = a(i * k, j * k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t s = 0; s < k; ++s) {
          const Rational& entry = a(i * k + r, j * k + s);
          if (r == s ? entry != diag : !entry.is_zero()) {
            return std::nullopt;
          }
        }
      }
      quotient(i, j) = diag;
    }
  }
  return quotient;
}

Factorization root(const Matrix& a) {
  const std::size_t g = std::gcd(a.rows(), a.cols());
  for (const std::size_t k : divisors_desc(g)) {
    if (auto divisor = is_multiple(a, k)) {
      return {std::move(*divisor), k};
    }
  }
  return {a, 1}; // unreachable: k = 1 always succeeds
}

std::pair<ShapeRatio, std::size_t> classify(const Matrix& a) {
  const std::size_t k = std::gcd(a.rows(), a.cols());
  return {ShapeRatio(a.rows() / k, a.cols() / k), k};
}

std::size_t component_index(const Matrix& a) {
  return std::gcd(a.rows(), a.cols());
}

bool equivalent(const Matrix& a, const Matrix& b) {
  if (ShapeRatio::of(a) != ShapeRatio::of(b)) {
    return false;
  }
  return root(a).divisor == root(b).divisor;
}

namespace {

// Lifts both matrices to their least common shape and compares; the lift
// amounts t/ka, t/kb are automatically coprime.
std::optional<Matrix> minimal_common_lift(const Matrix& a, const Matrix& b) {
  if (ShapeRatio::of(a) != ShapeRatio::of(b)) {
    return std::nullopt;
  }
  const std::size_t ka = component_index(a);
  const std::size_t kb = component_index(b);
  const std::size_t t = std::lcm(ka, kb);
  const Matrix lift_a = t == ka ? a : kron(a, identity(t / ka));
  const Matrix lift_b = t == kb ? b : kron(b, identity(t / kb));
  if (lift_a == lift_b) {
    return lift_a;
  }
  return std::nullopt;
}

} // namespace

bool equivalent_by_minimal_lift(const Matrix& a, const Matrix& b) {
  return minimal_common_lift(a, b).has_value();
}

std::optional<Matrix> theta(const Matrix& a, const Matrix& b) {
  return minimal_common_lift(a, b);
}

std::optional<Matrix> lambda_gcd(const Matrix& a, const Matrix& b) {
  if (ShapeRatio::of(a) != ShapeRatio::of(b)) {
    return std::nullopt;
  }
  const Factorization fa = root(a);
  const Factorization fb = root(b);
  if (!(fa.divisor == fb.divisor)) {
    return std::nullopt;
  }
  const std::size_t g = std::gcd(fa.multiplicity, fb.multiplicity);
  if (g == 1) {
    return fa.divisor;
  }
  return kron(fa.divisor, identity(g));
}

MatrixClass::MatrixClass(const Matrix& representative)
    : root_(stpq::root(representative).divisor),
      ratio_(ShapeRatio::of(root_)),
      root_index_(component_index(root_)) {}

MatrixClass class_of(const Matrix& a) { return MatrixClass(a); }

} // namespace stpq
