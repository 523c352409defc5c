// Serial reference versus OpenMP kernels for the parallel entry points.
#include <benchmark/benchmark.h>

#include "mvt/bracket.hpp"
#include "mvt/decomposition.hpp"
#include "mvt/fixtures.hpp"
#include "mvt/lifting.hpp"

using namespace mvt;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_MinimalMatroidsThird93(benchmark::State& state) {
  Matroid m = builtin_config("third93").matroid;
  for (auto _ : state) benchmark::DoNotOptimize(minimal_matroids(m, exec_of(state)));
}

void BM_MinimalMatroidsPappusLoop(benchmark::State& state) {
  Matroid m = set_loops(builtin_config("pappus").matroid, {9});
  for (auto _ : state) benchmark::DoNotOptimize(minimal_matroids(m, exec_of(state)));
}

void BM_IdentityTestPappusRecipe(benchmark::State& state) {
  const auto& recipe = curated_recipe("pappus-9");
  BracketPoly p = expand_gc(recipe[0].expression);
  BracketPoly r = parse_poly(recipe[0].printed);
  for (auto _ : state) benchmark::DoNotOptimize(identity_test(p, r, 200, 0, true, exec_of(state)));
}

void BM_KernelDimDrawsPappus(benchmark::State& state) {
  Matroid m = delete_points(builtin_config("pappus").matroid, {1, 9});
  for (auto _ : state) benchmark::DoNotOptimize(kernel_dim_draws(m, 20, 0, exec_of(state)));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the parallel kernel.
BENCHMARK(BM_MinimalMatroidsThird93)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalMatroidsPappusLoop)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityTestPappusRecipe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelDimDrawsPappus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
