#include "verify_suites.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <ostream>

#include "stpq/projection.hpp"
#include "stpq/random.hpp"
#include "stpq/stp.hpp"

namespace stpq::cli {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x51709a;
constexpr std::size_t kIterations = 200;

// The 3x6 example matrix used throughout the projection suite.
const Matrix& example_matrix() {
  static const Matrix a{{1, 2, -3, 0, 2, 1},
                        {2, 1, -2, -1, 1, 0},
                        {0, -1, -1, 3, 1, -2}};
  return a;
}

struct Reporter {
  std::ostream& out;
  bool ok = true;

  void check(bool passed, const std::string& what) {
    out << (passed ? "  [ok]   " : "  [FAIL] ") << what << "\n";
    ok = ok && passed;
  }

  /// Runs `iterations` random trials and reports the pass count.
  void property(const std::string& what, std::size_t iterations,
                const std::function<bool(std::mt19937_64&)>& trial) {
    std::size_t passed = 0;
    for (std::size_t i = 0; i < iterations; ++i) {
      std::mt19937_64 rng(kSuiteSeed + i);
      if (trial(rng)) {
        ++passed;
      }
    }
    check(passed == iterations,
          what + " (" + std::to_string(passed) + "/" +
              std::to_string(iterations) + ")");
  }
};

MatrixClass random_class(std::mt19937_64& rng, const ShapeRatio& ratio) {
  const std::size_t index = static_cast<std::size_t>(bounded_draw(rng, 1, 4));
  return MatrixClass(random_component_matrix(rng, ratio, index));
}

ShapeRatio small_ratio(std::mt19937_64& rng) {
  // Root dimensions stay at desk scale: mu_y <= 4, mu_x <= 8 before lifting.
  return random_ratio(rng, 2, 3);
}

bool suite_example_6_4(std::ostream& out) {
  Reporter r{out};

  const MatrixClass x(example_matrix());
  r.check(x.shape_ratio() == ShapeRatio(1, 2) && x.root_index() == 3,
          "input lies in the 1/2-ratio family at component index 3");

  const ProjectionResult p = project(x, 2);
  const Matrix expected_root{{1, 0, {1, 3}, 0}, {0, {-1, 3}, 0, -1}};
  r.check(p.projection.root() == expected_root,
          "projection root onto component 2 matches the expected 2x4 matrix");

  const Matrix e = residual_matrix(x, 2);
  const Matrix expected_residual{
      {0, 0, 2, 0, -3, 0, {-1, 3}, 0, 2, 0, 1, 0},
      {0, 0, 0, 2, 0, -3, 0, {-1, 3}, 0, 2, 0, 1},
      {2, 0, 0, 0, -2, 0, -1, 0, {2, 3}, 0, 0, 0},
      {0, 2, 0, {4, 3}, 0, -2, 0, -1, 0, 2, 0, 0},
      {0, 0, -1, 0, {-2, 3}, 0, 3, 0, 1, 0, -1, 0},
      {0, 0, 0, -1, 0, {-2, 3}, 0, 3, 0, 1, 0, -1}};
  r.check(e == expected_residual, "explicit 6x12 residual matches entry for entry");

  r.check(class_inner(p.projection, p.residual) == Rational(0),
          "projection and residual are orthogonal");
  r.check(norm_sq(x) == norm_sq(p.projection) + norm_sq(p.residual),
          "norm_sq splits as projection + residual");
  r.check(p.distance_sq_to_target == Rational(128, 9),
          "squared distance to the target component is 128/9");
  out << "  [info] class_inner(<E>, <A>) = "
      << class_inner(MatrixClass(e), x).to_string()
      << " (residual is orthogonal to the projection, not to <A>)\n";

  r.check(verify_minimality(x, 2, 1000, kSuiteSeed),
          "no random competitor in component 2 beats the projection "
          "(1000 trials)");
  return r.ok;
}

bool suite_stp(std::ostream& out) {
  Reporter r{out};
  r.property("coincides with the conventional product when dimensions match",
             kIterations, [](std::mt19937_64& rng) {
               const auto m = static_cast<std::size_t>(bounded_draw(rng, 1, 5));
               const auto n = static_cast<std::size_t>(bounded_draw(rng, 1, 5));
               const auto q = static_cast<std::size_t>(bounded_draw(rng, 1, 5));
               const Matrix a = random_matrix(rng, m, n);
               const Matrix b = random_matrix(rng, n, q);
               return stp(a, b) == a * b;
             });
  r.property("associativity", kIterations, [](std::mt19937_64& rng) {
    const auto dim = [&] {
      return static_cast<std::size_t>(bounded_draw(rng, 1, 4));
    };
    const Matrix a = random_matrix(rng, dim(), dim(), 5, 5);
    const Matrix b = random_matrix(rng, dim(), dim(), 5, 5);
    const Matrix c = random_matrix(rng, dim(), dim(), 5, 5);
    return stp(stp(a, b), c) == stp(a, stp(b, c));
  });
  r.property("dimension law", kIterations, [](std::mt19937_64& rng) {
    const auto dim = [&] {
      return static_cast<std::size_t>(bounded_draw(rng, 1, 6));
    };
    const std::size_t m = dim(), n = dim(), p = dim(), q = dim();
    const std::size_t t = std::lcm(n, p);
    const Matrix prod = stp(random_matrix(rng, m, n), random_matrix(rng, p, q));
    return prod.rows() == m * (t / n) && prod.cols() == q * (t / p);
  });
  return r.ok;
}

bool suite_equivalence(std::ostream& out) {
  Reporter r{out};
  r.property("root reconstruction and idempotence", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const auto lift =
                   static_cast<std::size_t>(bounded_draw(rng, 1, 6));
               const Matrix a =
                   kron(random_component_matrix(rng, mu, 1), identity(lift));
               const Factorization f = root(a);
               return kron(f.divisor, identity(f.multiplicity)) == a &&
                      root(f.divisor).multiplicity == 1;
             });
  r.property("maximality of the root multiplicity (all divisors enumerated)",
             kIterations, [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const auto lift =
                   static_cast<std::size_t>(bounded_draw(rng, 1, 6));
               const Matrix a =
                   kron(random_component_matrix(rng, mu, 1), identity(lift));
               const std::size_t g = std::gcd(a.rows(), a.cols());
               const std::size_t max = root(a).multiplicity;
               for (std::size_t d = 1; d <= g; ++d) {
                 if (g % d == 0 && is_multiple(a, d).has_value() && max % d != 0) {
                   return false;
                 }
               }
               return true;
             });
  r.property("root route agrees with the minimal-lift route", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const Matrix base = random_component_matrix(rng, mu, 1);
               Matrix a = kron(base, identity(static_cast<std::size_t>(
                                         bounded_draw(rng, 1, 4))));
               Matrix b = kron(base, identity(static_cast<std::size_t>(
                                         bounded_draw(rng, 1, 4))));
               const bool perturb = bounded_draw(rng, 0, 1) == 1;
               if (perturb) {
                 const auto i = static_cast<std::size_t>(
                     bounded_draw(rng, 0, static_cast<long>(b.rows()) - 1));
                 const auto j = static_cast<std::size_t>(
                     bounded_draw(rng, 0, static_cast<long>(b.cols()) - 1));
                 b(i, j) += 1;
               }
               const bool by_root = equivalent(a, b);
               const bool by_lift = equivalent_by_minimal_lift(a, b);
               return by_root == by_lift && by_root == !perturb;
             });
  r.property("theta and lambda invert each other on constructed lifts",
             kIterations, [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const Matrix base = random_component_matrix(rng, mu, 1);
               const auto ja = static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               const auto jb = static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               const Matrix a = kron(base, identity(ja));
               const Matrix b = kron(base, identity(jb));
               const auto th = theta(a, b);
               const auto la = lambda_gcd(a, b);
               if (!th || !la) {
                 return false;
               }
               const Matrix root_base = root(base).divisor;
               const std::size_t ra = root(a).multiplicity;
               const std::size_t rb = root(b).multiplicity;
               return *th == kron(root_base, identity(std::lcm(ra, rb))) &&
                      *la == (std::gcd(ra, rb) == 1
                                  ? root_base
                                  : kron(root_base, identity(std::gcd(ra, rb))));
             });
  return r.ok;
}

bool suite_axioms(std::ostream& out) {
  Reporter r{out};
  r.property("class addition is commutative and associative", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               const MatrixClass z = random_class(rng, mu);
               return class_add(x, y) == class_add(y, x) &&
                      class_add(class_add(x, y), z) ==
                          class_add(x, class_add(y, z));
             });
  r.property("zero class and additive inverse", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass zero(Matrix::zero(mu.mu_y(), mu.mu_x()));
               return class_add(x, zero) == x &&
                      class_add(x, class_scale(Rational(-1), x)) == zero;
             });
  r.property("scalar distributivity", kIterations, [](std::mt19937_64& rng) {
    const ShapeRatio mu = small_ratio(rng);
    const MatrixClass x = random_class(rng, mu);
    const MatrixClass y = random_class(rng, mu);
    const Rational a = random_rational(rng, 6, 6);
    const Rational b = random_rational(rng, 6, 6);
    return class_scale(a, class_add(x, y)) ==
               class_add(class_scale(a, x), class_scale(a, y)) &&
           class_scale(a + b, x) ==
               class_add(class_scale(a, x), class_scale(b, x));
  });
  r.property("inner product axioms", kIterations, [](std::mt19937_64& rng) {
    const ShapeRatio mu = small_ratio(rng);
    const MatrixClass x = random_class(rng, mu);
    const MatrixClass y = random_class(rng, mu);
    const MatrixClass z = random_class(rng, mu);
    const Rational a = random_rational(rng, 6, 6);
    const bool additive = class_inner(class_add(x, y), z) ==
                          class_inner(x, z) + class_inner(y, z);
    const bool symmetric = class_inner(x, y) == class_inner(y, x);
    const bool homogeneous = class_inner(class_scale(a, x), y) ==
                             a * class_inner(x, y);
    const bool positive =
        norm_sq(x) > Rational(0) || (norm_sq(x) == Rational(0) && x.is_zero());
    return additive && symmetric && homogeneous && positive;
  });
  r.property("representative independence of the inner product", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const Matrix a = random_component_matrix(rng, mu, 1);
               const Matrix b = random_component_matrix(rng, mu, 1);
               const auto s = static_cast<std::size_t>(bounded_draw(rng, 1, 5));
               const auto t = static_cast<std::size_t>(bounded_draw(rng, 1, 5));
               return weighted_inner(kron(a, identity(s)), kron(b, identity(t))) ==
                      weighted_inner(a, b);
             });
  r.property("Schwarz inequality (squared form) and parallelogram law",
             kIterations, [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               const Rational ip = class_inner(x, y);
               const bool schwarz = ip * ip <= norm_sq(x) * norm_sq(y);
               const bool parallelogram =
                   norm_sq(class_add(x, y)) + norm_sq(class_sub(x, y)) ==
                   Rational(2) * norm_sq(x) + Rational(2) * norm_sq(y);
               return schwarz && parallelogram;
             });
  return r.ok;
}

bool suite_metric(std::ostream& out) {
  Reporter r{out};
  r.property("identity of indiscernibles and symmetry", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               const bool self = distance_sq(x, x) == Rational(0);
               const bool sym = distance_sq(x, y) == distance_sq(y, x);
               const bool separated =
                   (distance_sq(x, y) == Rational(0)) == (x == y);
               return self && sym && separated;
             });
  r.property("triangle inequality (exact squared criterion)", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               const MatrixClass z = random_class(rng, mu);
               const Rational ab = distance_sq(x, y);
               const Rational bc = distance_sq(y, z);
               const Rational ac = distance_sq(x, z);
               // sqrt(ac) <= sqrt(ab) + sqrt(bc) without taking roots.
               if (ac <= ab + bc) {
                 return true;
               }
               const Rational excess = ac - ab - bc;
               return excess * excess <= Rational(4) * ab * bc;
             });
  r.property("transpose is an isometric involution", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               return transpose_class(transpose_class(x)) == x &&
                      distance_sq(transpose_class(x), transpose_class(y)) ==
                          distance_sq(x, y);
             });
  r.property("k-fold embedding is isometric", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               const auto k = static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               const Matrix diff = lminus(embed(x, k), embed(y, k));
               return weighted_norm_sq(diff) == distance_sq(x, y);
             });
  r.property("convex path endpoints and distance profile", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const MatrixClass y = random_class(rng, mu);
               if (!(convex_path(x, y, Rational(1)) == x) ||
                   !(convex_path(x, y, Rational(0)) == y)) {
                 return false;
               }
               for (const long q : {0L, 1L, 2L, 3L, 4L}) {
                 const Rational lambda(q, 4);
                 const Rational remainder = Rational(1) - lambda;
                 const MatrixClass point = convex_path(x, y, lambda);
                 if (distance_sq(point, x) !=
                     remainder * remainder * distance_sq(x, y)) {
                   return false;
                 }
               }
               return true;
             });
  return r.ok;
}

bool suite_projection(std::ostream& out) {
  Reporter r{out};
  r.property("orthogonality and Pythagoras", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const auto alpha =
                   static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               const ProjectionResult p = project(x, alpha);
               return class_inner(p.projection, p.residual) == Rational(0) &&
                      norm_sq(x) ==
                          norm_sq(p.projection) + norm_sq(p.residual);
             });
  r.property("representative independence", kIterations,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const Matrix a = random_component_matrix(rng, mu, 1);
               const auto lift =
                   static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               const auto alpha =
                   static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               return project(MatrixClass(kron(a, identity(lift))), alpha)
                          .projection ==
                      project(MatrixClass(a), alpha).projection;
             });
  r.property("idempotence", kIterations, [](std::mt19937_64& rng) {
    const ShapeRatio mu = small_ratio(rng);
    const MatrixClass x = random_class(rng, mu);
    const auto alpha = static_cast<std::size_t>(bounded_draw(rng, 1, 4));
    const ProjectionResult once = project(x, alpha);
    const ProjectionResult twice = project(once.projection, alpha);
    return twice.projection == once.projection && twice.residual.is_zero();
  });
  r.property("linearity", kIterations, [](std::mt19937_64& rng) {
    const ShapeRatio mu = small_ratio(rng);
    const MatrixClass x = random_class(rng, mu);
    const MatrixClass y = random_class(rng, mu);
    const auto alpha = static_cast<std::size_t>(bounded_draw(rng, 1, 4));
    return project(class_add(x, y), alpha).projection ==
           class_add(project(x, alpha).projection,
                     project(y, alpha).projection);
  });
  r.property("minimality certificate (40 trials each)", 50,
             [](std::mt19937_64& rng) {
               const ShapeRatio mu = small_ratio(rng);
               const MatrixClass x = random_class(rng, mu);
               const auto alpha =
                   static_cast<std::size_t>(bounded_draw(rng, 1, 4));
               return verify_minimality(x, alpha, 40, rng());
             });
  return r.ok;
}

const std::map<std::string, bool (*)(std::ostream&)>& registry() {
  static const std::map<std::string, bool (*)(std::ostream&)> suites{
      {"example-6-4", suite_example_6_4}, {"stp", suite_stp},
      {"equivalence", suite_equivalence}, {"axioms", suite_axioms},
      {"metric", suite_metric},           {"projection", suite_projection},
  };
  return suites;
}

} // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) {
    names.push_back(name);
  }
  names.push_back("all");
  return names;
}

bool run_suite(const std::string& name, std::ostream& out) {
  if (name == "all") {
    bool ok = true;
    for (const auto& [suite, fn] : registry()) {
      out << suite << ":\n";
      ok = fn(out) && ok;
    }
    return ok;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& n : suite_names()) {
      known += known.empty() ? n : ", " + n;
    }
    throw DomainError("unknown suite '" + name + "' (known: " + known + ")");
  }
  out << name << ":\n";
  return it->second(out);
}

} // namespace stpq::cli
