#include <benchmark/benchmark.h>

#include <random>

#include <landaulab/projector.hpp>

namespace {

landaulab::PlanarField noise(const landaulab::QuadratureGrid& g) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> gauss(0.0, 1.0);
    landaulab::PlanarField f(g.n_points());
    for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = {gauss(rng), gauss(rng)};
    return f;
}

void BM_ProjectorApply(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int m_max = 3 * k + 8;
    landaulab::QuadratureGrid g = landaulab::build_grid_for_level(k, m_max);
    landaulab::LevelProjector proj(g, k, m_max);
    landaulab::PlanarField f = noise(g);
    for (auto _ : state) benchmark::DoNotOptimize(proj.apply(f));
}
BENCHMARK(BM_ProjectorApply)->Arg(4)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
