#include <benchmark/benchmark.h>

#include "pgreedy/bessel.hpp"
#include "pgreedy/functional.hpp"
#include "pgreedy/kernel.hpp"

namespace {

void BM_BesselK(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double r = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgreedy::bessel_k(order, r));
    r = r < 20 ? r * 1.01 : 0.01;
  }
}
BENCHMARK(BM_BesselK)->Arg(0)->Arg(3)->Arg(8);

void BM_DualInner(benchmark::State& state) {
  const pgreedy::KernelSpec spec(static_cast<int>(state.range(0)), 2);
  const pgreedy::Functional a{pgreedy::FunctionalKind::DomainOpDelta, pgreedy::Point{0.1, 0.2}};
  pgreedy::Functional b{pgreedy::FunctionalKind::DomainOpDelta, pgreedy::Point{-0.3, 0.4}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgreedy::dual_inner(a, b, spec));
    b.point[0] = b.point[0] < 0.9 ? b.point[0] + 1e-3 : -0.9;
  }
}
BENCHMARK(BM_DualInner)->Arg(4)->Arg(6);

}  // namespace
