#include <doctest.h>

#include <numeric>

#include "../support/generators.hpp"
#include "stpq/equivalence.hpp"

using namespace stpq;

TEST_CASE("is_multiple detects scalar-identity block structure") {
  CHECK(is_multiple(Matrix{{2, 0}, {0, 2}}, 2) == Matrix{{2}});
  CHECK_FALSE(is_multiple(Matrix{{1, 2}, {3, 4}}, 2).has_value());
  CHECK(is_multiple(Matrix{{1, 2}}, 1) == Matrix{{1, 2}});
  CHECK_FALSE(is_multiple(Matrix{{1, 2}}, 2).has_value()); // 2 does not divide 1

  std::mt19937_64 rng(test::kSeed + 20);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = random_matrix(rng, 2, 3);
    CHECK(is_multiple(kron(a, identity(3)), 3) == a);
  }
}

TEST_CASE("root factorization on known inputs") {
  const Factorization id4 = root(identity(4));
  CHECK(id4.divisor == Matrix{{1}});
  CHECK(id4.multiplicity == 4);

  const Matrix irreducible{{1, 2}, {3, 4}};
  const Factorization plain = root(irreducible);
  CHECK(plain.divisor == irreducible);
  CHECK(plain.multiplicity == 1);

  const Factorization lifted = root(kron(irreducible, identity(3)));
  CHECK(lifted.divisor == irreducible);
  CHECK(lifted.multiplicity == 3);
}

TEST_CASE("zero matrices reduce to the zero root of the reduced shape") {
  const Factorization f = root(Matrix::zero(4, 6));
  CHECK(f.divisor == Matrix::zero(2, 3));
  CHECK(f.multiplicity == 2);
}

TEST_CASE("root reconstruction, idempotence, maximality") {
  std::mt19937_64 rng(test::kSeed + 21);
  for (int i = 0; i < 150; ++i) {
    const ShapeRatio mu = test::small_ratio(rng);
    const std::size_t lift = test::draw_index(rng, 1, 6);
    const Matrix a = kron(random_component_matrix(rng, mu, 1), identity(lift));
    const Factorization f = root(a);

    CHECK(kron(f.divisor, identity(f.multiplicity)) == a);
    CHECK(root(f.divisor).multiplicity == 1);

    // Brute force over every candidate multiplicity, not just the maximum.
    const std::size_t g = std::gcd(a.rows(), a.cols());
    for (std::size_t d = 1; d <= g; ++d) {
      if (g % d == 0 && is_multiple(a, d).has_value()) {
        CHECK(f.multiplicity % d == 0);
      }
    }
  }
}

TEST_CASE("equivalence on known pairs") {
  CHECK(equivalent(identity(2), Matrix{{1}}));
  CHECK_FALSE(equivalent(Matrix{{1, 2}}, Matrix{{1, 3}}));

  std::mt19937_64 rng(test::kSeed + 22);
  const Matrix a = random_matrix(rng, 2, 3);
  CHECK(equivalent(a, kron(a, identity(5))));
}

TEST_CASE("equivalence is reflexive, symmetric, transitive on lifts") {
  std::mt19937_64 rng(test::kSeed + 23);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = random_matrix(rng, test::draw_index(rng, 1, 3),
                                   test::draw_index(rng, 1, 3));
    const Matrix b = kron(a, identity(test::draw_index(rng, 2, 4)));
    const Matrix c = kron(a, identity(test::draw_index(rng, 2, 4)));
    CHECK(equivalent(a, a));
    CHECK(equivalent(a, b));
    CHECK(equivalent(b, a));
    CHECK((equivalent(a, b) && equivalent(b, c)) == equivalent(a, c));
  }
}

TEST_CASE("different shape ratios are never equivalent") {
  std::mt19937_64 rng(test::kSeed + 24);
  for (int i = 0; i < 50; ++i) {
    const Matrix a = random_matrix(rng, test::draw_index(rng, 1, 4),
                                   test::draw_index(rng, 1, 4));
    const Matrix b = random_matrix(rng, test::draw_index(rng, 1, 4),
                                   test::draw_index(rng, 1, 4));
    if (classify(a).first != classify(b).first) {
      CHECK_FALSE(equivalent(a, b));
      CHECK_FALSE(equivalent_by_minimal_lift(a, b));
    }
  }
}

TEST_CASE("root route and minimal-lift route agree") {
  std::mt19937_64 rng(test::kSeed + 25);
  for (int i = 0; i < 200; ++i) {
    const ShapeRatio mu = test::small_ratio(rng);
    const Matrix base = random_component_matrix(rng, mu, 1);
    Matrix a = kron(base, identity(test::draw_index(rng, 1, 4)));
    Matrix b = kron(base, identity(test::draw_index(rng, 1, 4)));
    const bool perturb = i % 2 == 0;
    if (perturb) {
      const std::size_t r = test::draw_index(rng, 0, b.rows() - 1);
      const std::size_t c = test::draw_index(rng, 0, b.cols() - 1);
      b(r, c) += 1;
    }
    CHECK(equivalent(a, b) == equivalent_by_minimal_lift(a, b));
    CHECK(equivalent(a, b) == !perturb);
  }
}

TEST_CASE("theta is the least common lift") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(theta(a, a) == a);
  CHECK(theta(Matrix{{1}}, identity(2)) == identity(2));
  CHECK_FALSE(theta(Matrix{{1, 2}}, Matrix{{1, 3}}).has_value());

  std::mt19937_64 rng(test::kSeed + 26);
  for (int i = 0; i < 50; ++i) {
    const ShapeRatio mu = test::small_ratio(rng);
    const Matrix base = random_component_matrix(rng, mu, 1);
    const std::size_t j = test::draw_index(rng, 1, 5);
    const std::size_t k = test::draw_index(rng, 1, 5);
    CHECK(theta(kron(base, identity(j)), kron(base, identity(k))) ==
          kron(base, identity(std::lcm(j, k))));
  }
}

TEST_CASE("lambda is the greatest common divisor") {
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(lambda_gcd(a, a) == a);
  CHECK_FALSE(lambda_gcd(Matrix{{1, 2}}, Matrix{{1, 3}}).has_value());

  std::mt19937_64 rng(test::kSeed + 27);
  const Matrix r = random_matrix(rng, 2, 3);
  CHECK(lambda_gcd(kron(r, identity(2)), kron(r, identity(3))) == r);

  // The gcd of I_6 and I_4 is I_2 (the root lifted by gcd(6, 4)), not the
  // bare root: [1] would force a non-minimal common lift I_24.
  CHECK(lambda_gcd(identity(6), identity(4)) == identity(2));

  for (int i = 0; i < 50; ++i) {
    const ShapeRatio mu = test::small_ratio(rng);
    const Matrix base = random_component_matrix(rng, mu, 1);
    const std::size_t j = test::draw_index(rng, 1, 5);
    const std::size_t k = test::draw_index(rng, 1, 5);
    const std::size_t g = std::gcd(j, k);
    const Matrix expected = g == 1 ? base : kron(base, identity(g));
    const auto lambda = lambda_gcd(kron(base, identity(j)), kron(base, identity(k)));
    REQUIRE(lambda.has_value());
    CHECK(*lambda == expected);

    // Both inputs factor through lambda with the coprime lift exponents
    // taken from theta.
    CHECK(is_multiple(kron(base, identity(j)), j / g) == *lambda);
    CHECK(is_multiple(kron(base, identity(k)), k / g) == *lambda);
  }
}

TEST_CASE("classify") {
  const auto [mu1, k1] = classify(Matrix::zero(3, 6));
  CHECK(mu1 == ShapeRatio(1, 2));
  CHECK(k1 == 3);

  const auto [mu2, k2] = classify(Matrix{{5}});
  CHECK(mu2 == ShapeRatio(1, 1));
  CHECK(k2 == 1);

  const auto [mu3, k3] = classify(Matrix::zero(4, 6));
  CHECK(mu3 == ShapeRatio(2, 3));
  CHECK(k3 == 2);
}

TEST_CASE("class_of collapses lifts to the canonical root") {
  CHECK(class_of(identity(3)).root() == Matrix{{1}});
  const Matrix a{{1, 2}, {3, 4}};
  CHECK(class_of(a).root() == a);

  std::mt19937_64 rng(test::kSeed + 28);
  for (int i = 0; i < 50; ++i) {
    const Matrix b = random_matrix(rng, 2, 3);
    CHECK(class_of(b) == class_of(kron(b, identity(7))));
  }
}

TEST_CASE("class exposes ratio and minimal index") {
  const MatrixClass x(kron(Matrix{{1, 2, 0}, {0, 1, 5}}, identity(2)));
  CHECK(x.shape_ratio() == ShapeRatio(2, 3));
  CHECK(x.root_index() == 1);
  CHECK(x.root() == Matrix{{1, 2, 0}, {0, 1, 5}});
}
