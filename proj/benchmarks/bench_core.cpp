// Microbenchmarks for the hot paths: polytope projection, approximation
// construction, and the orbit/mean recurrence.

#include <benchmark/benchmark.h>

#include "attract/attractive_set.hpp"
#include "attract/catalog.hpp"
#include "attract/ergodic.hpp"
#include "attract/sampling.hpp"

namespace {

using namespace attract;

void BM_dykstra_project(benchmark::State& state) {
  const auto n_halfspaces = static_cast<int>(state.range(0));
  const Mapping rotation = make_rotation(1.0);
  const auto samples = sample_schedule(rotation.domain, n_halfspaces, 0, 7);
  const auto approx = build_attractive_approx(rotation, samples);
  const Point x{1.7, -0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_attractive(approx, x));
  }
}
BENCHMARK(BM_dykstra_project)->Arg(16)->Arg(64)->Arg(256);

void BM_build_approx(benchmark::State& state) {
  const auto n_samples = static_cast<int>(state.range(0));
  const Mapping halving = make_halving();
  const auto samples = sample_schedule(halving.domain, n_samples, n_samples, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_attractive_approx(halving, samples));
  }
}
BENCHMARK(BM_build_approx)->Arg(32)->Arg(128);

void BM_iterate(benchmark::State& state) {
  const auto n_max = static_cast<int>(state.range(0));
  const Mapping rotation = make_rotation(1.0);
  const auto samples = sample_schedule(rotation.domain, 32, 32, 7);
  const auto approx = build_attractive_approx(rotation, samples);
  const Point x{1.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(iterate(rotation, x, n_max, approx));
  }
}
BENCHMARK(BM_iterate)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
