#include <benchmark/benchmark.h>

#include <random>

#include "polyvar/geometry.hpp"
#include "polyvar/poly.hpp"

using namespace polyvar;

namespace {

std::vector<cplx> random_points(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> zs;
    for (int k = 0; k < n; ++k) zs.emplace_back(u(rng), u(rng));
    return zs;
}

void bm_roots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Polynomial f = from_roots(random_points(n, 42));
    for (auto _ : state) benchmark::DoNotOptimize(roots(f));
}
BENCHMARK(bm_roots)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void bm_p_variance(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto set = WeightedPointSet::uniform(random_points(n, 43));
    const double p = state.range(1) == 0 ? kPInf : double(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(p_variance(set, p));
}
BENCHMARK(bm_p_variance)
    ->Args({10, 1})
    ->Args({10, 2})
    ->Args({10, 0})
    ->Args({100, 1})
    ->Args({100, 2})
    ->Args({100, 0});

void bm_critical_points(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Polynomial f = from_roots(random_points(n, 44));
    for (auto _ : state) benchmark::DoNotOptimize(critical_points(f));
}
BENCHMARK(bm_critical_points)->Arg(5)->Arg(15)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
