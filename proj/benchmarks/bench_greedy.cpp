#include <benchmark/benchmark.h>

#include "pgreedy/analysis.hpp"
#include "pgreedy/geometry.hpp"
#include "pgreedy/greedy.hpp"

namespace {

// N greedy steps over a disk candidate set of about range(0) functionals.
void BM_GreedySteps(benchmark::State& state) {
  const pgreedy::KernelSpec spec(4, 2);
  const auto set = pgreedy::disk_functional_set(
      pgreedy::disk_candidates(static_cast<std::size_t>(state.range(0)), 120));
  const auto steps = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    auto s = pgreedy::init(set, spec);
    for (std::size_t k = 0; k < steps; ++k) pgreedy::extend(s, *pgreedy::select_standard(s, 0.0), set, spec);
    benchmark::DoNotOptimize(s.max_residual());
  }
  state.SetItemsProcessed(static_cast<long>(state.iterations() * steps));
}
BENCHMARK(BM_GreedySteps)->Args({2000, 50})->Args({2000, 200})->Args({8000, 100})->Unit(benchmark::kMillisecond);

void BM_ConditionEstimate(benchmark::State& state) {
  const pgreedy::KernelSpec spec(4, 2);
  const auto set = pgreedy::disk_functional_set(pgreedy::disk_candidates(2000, 120));
  auto s = pgreedy::init(set, spec);
  for (long k = 0; k < state.range(0); ++k) pgreedy::extend(s, *pgreedy::select_standard(s, 0.0), set, spec);
  for (auto _ : state) benchmark::DoNotOptimize(pgreedy::condition_estimate(s.c()));
}
BENCHMARK(BM_ConditionEstimate)->Arg(50)->Arg(200);

}  // namespace
