#include <benchmark/benchmark.h>

#include "injgen/builders.hpp"
#include "injgen/homology.hpp"
#include "injgen/random.hpp"

using namespace injgen;

namespace {

const Field F3 = Field::prime(3);

Matrix random_matrix(const Field& f, Rng& rng, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng.scalar(f));
  return m;
}

void BM_RrefPrime(benchmark::State& state) {
  Rng rng(1);
  Matrix m = random_matrix(F3, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(16)->Arg(64)->Arg(128);

void BM_RrefRational(benchmark::State& state) {
  Field q = Field::rationals();
  Rng rng(2);
  Matrix m = random_matrix(q, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_CoveringRing(benchmark::State& state) {
  auto r = truncated_polynomial(F3, static_cast<std::size_t>(state.range(0)),
                                FiniteAbelianGroup::cyclic(state.range(0)), GroupElem{1});
  for (auto _ : state) benchmark::DoNotOptimize(covering_ring(r));
}
BENCHMARK(BM_CoveringRing)->Arg(2)->Arg(4)->Arg(6);

void BM_ResolveDualNumbersSimple(benchmark::State& state) {
  auto a = truncated_polynomial(F3, 2, FiniteAbelianGroup::cyclic(1), GroupElem{0});
  Module simple(a, Side::Right, 1, {Matrix::identity(F3, 1), Matrix(F3, 1, 1)}, {a->group().zero()});
  for (auto _ : state) benchmark::DoNotOptimize(resolve(simple, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ResolveDualNumbersSimple)->Arg(4)->Arg(12)->Arg(24);

void BM_ResolveRandomModule(benchmark::State& state) {
  Rng rng(3);
  auto a = linear_quiver_algebra(F3, static_cast<std::size_t>(state.range(0)));
  Module m = random_module(a, Side::Right, rng, 12);
  for (auto _ : state) benchmark::DoNotOptimize(resolve(m, 8));
}
BENCHMARK(BM_ResolveRandomModule)->Arg(3)->Arg(5);

void BM_TensorPowers(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Bimodule arrows = arrow_bimodule(F3, linear_quiver(n), vertex_algebra(F3, n));
  for (auto _ : state) {
    TensorPowers powers(arrows, n);
    benchmark::DoNotOptimize(powers.dim(n - 1));
  }
}
BENCHMARK(BM_TensorPowers)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
