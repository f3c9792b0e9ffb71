#include <benchmark/benchmark.h>

#include <landaulab/basis.hpp>

namespace {

void BM_RadialEval(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double r = 0.0;
    for (auto _ : state) {
        r += 1e-3;
        if (r > 12.0) r = 0.1;
        benchmark::DoNotOptimize(landaulab::landau_radial(k, k + 3, r));
    }
}
BENCHMARK(BM_RadialEval)->Arg(4)->Arg(16)->Arg(40);

void BM_ProjectionKernel(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Eigen::Vector2d x(1.0, -0.4), y(0.3, 0.9);
    for (auto _ : state) {
        y[0] += 1e-3;
        if (y[0] > 5.0) y[0] = -5.0;
        benchmark::DoNotOptimize(landaulab::projection_kernel(k, x, y));
    }
}
BENCHMARK(BM_ProjectionKernel)->Arg(4)->Arg(16)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
