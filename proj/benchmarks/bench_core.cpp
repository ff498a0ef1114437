#include <benchmark/benchmark.h>

#include <random>

#include "stpq/projection.hpp"
#include "stpq/random.hpp"
#include "stpq/stp.hpp"

using namespace stpq;

namespace {

Matrix sized_random(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_matrix(rng, rows, cols, 9, 9);
}

void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sized_random(n, n, 1);
  const Matrix b = sized_random(4, 4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_kron)->Arg(4)->Arg(8)->Arg(16);

void BM_stp_conforming(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sized_random(n, n, 3);
  const Matrix b = sized_random(n, n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stp(a, b));
  }
}
BENCHMARK(BM_stp_conforming)->Arg(4)->Arg(8)->Arg(16);

void BM_stp_lifted(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = sized_random(n, n, 5);
  const Matrix b = sized_random(n + 1, n + 1, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stp(a, b));
  }
}
BENCHMARK(BM_stp_lifted)->Arg(3)->Arg(5)->Arg(7);

void BM_root_reduction(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Matrix lifted = kron(sized_random(2, 3, 7), identity(k));
  for (auto _ : state) {
    benchmark::DoNotOptimize(root(lifted));
  }
}
BENCHMARK(BM_root_reduction)->Arg(2)->Arg(6)->Arg(12);

void BM_class_inner(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const MatrixClass x(kron(sized_random(1, 2, 8), identity(k)));
  const MatrixClass y(sized_random(k + 1, 2 * (k + 1), 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_inner(x, y));
  }
}
BENCHMARK(BM_class_inner)->Arg(2)->Arg(4)->Arg(8);

void BM_project(benchmark::State& state) {
  const auto beta = static_cast<std::size_t>(state.range(0));
  const MatrixClass x(sized_random(beta, 2 * beta, 10));
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(x, 4));
  }
}
BENCHMARK(BM_project)->Arg(3)->Arg(5)->Arg(9);

} // namespace

BENCHMARK_MAIN();
