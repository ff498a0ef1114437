#include <doctest.h>

#include <numeric>

#include "../support/generators.hpp"
#include "stpq/stp.hpp"

using namespace stpq;

TEST_CASE("matching inner dimensions give the conventional product") {
  CHECK(stp(Matrix{{1, 2}}, Matrix{{1}, {2}}) == Matrix{{5}});

  std::mt19937_64 rng(test::kSeed + 10);
  for (int i = 0; i < 200; ++i) {
    const std::size_t m = test::draw_index(rng, 1, 5);
    const std::size_t n = test::draw_index(rng, 1, 5);
    const std::size_t q = test::draw_index(rng, 1, 5);
    const Matrix a = random_matrix(rng, m, n);
    const Matrix b = random_matrix(rng, n, q);
    CHECK(stp(a, b) == a * b);
  }
}

TEST_CASE("hand-evaluated lifted product") {
  // t = 2: [1 2] times ([1 3] (x) I_2).
  CHECK(stp(Matrix{{1, 2}}, Matrix{{1, 3}}) == Matrix{{1, 2, 3, 6}});
}

TEST_CASE("right identity of size one") {
  std::mt19937_64 rng(test::kSeed + 11);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = random_matrix(rng, test::draw_index(rng, 1, 4),
                                   test::draw_index(rng, 1, 4));
    CHECK(stp(a, identity(1)) == a);
    CHECK(stp(identity(1), a) == a);
  }
}

TEST_CASE("associativity on random rational matrices") {
  std::mt19937_64 rng(test::kSeed + 12);
  for (int i = 0; i < 150; ++i) {
    const auto d = [&] { return test::draw_index(rng, 1, 4); };
    const Matrix a = random_matrix(rng, d(), d(), 5, 5);
    const Matrix b = random_matrix(rng, d(), d(), 5, 5);
    const Matrix c = random_matrix(rng, d(), d(), 5, 5);
    CHECK(stp(stp(a, b), c) == stp(a, stp(b, c)));
  }
}

TEST_CASE("dimension law") {
  std::mt19937_64 rng(test::kSeed + 13);
  for (int i = 0; i < 200; ++i) {
    const auto d = [&] { return test::draw_index(rng, 1, 6); };
    const std::size_t m = d(), n = d(), p = d(), q = d();
    const std::size_t t = std::lcm(n, p);
    const Matrix prod = stp(random_matrix(rng, m, n), random_matrix(rng, p, q));
    CHECK(prod.rows() == m * (t / n));
    CHECK(prod.cols() == q * (t / p));
  }
}
