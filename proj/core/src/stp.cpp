#include "stpq/stp.hpp"

#include <numeric>
#include <stdexcept>

namespace stpq {

Matrix stp(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.cols();
  const std::size_t p = b.rows();
  if (n == p) {
    return a * b;
  }
  const std::size_t t = std::lcm(n, p);
  const Matrix out = kron(a, identity(t / n)) * kron(b, identity(t / p));
  if (out.rows() != a.rows() * (t / n) || out.cols() != b.cols() * (t / p)) {
    throw std::logic_error("stp: result shape violates the dimension law");
  }
  return out;
}

} // namespace stpq
