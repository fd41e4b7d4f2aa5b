#include <benchmark/benchmark.h>

#include "weyl/kernels.hpp"
#include "weyl/measures.hpp"
#include "weyl/moebius.hpp"
#include "weyl/region.hpp"

namespace {

using namespace weyl;

const MomentSequence& gaussian_moments_21() {
    static const MomentSequence s = classical_moments(Gaussian{}, 21);
    return s;
}

void BM_OrthonormalSystem(benchmark::State& state) {
    const auto& s = gaussian_moments_21();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(orthonormal_system(s, n));
}
BENCHMARK(BM_OrthonormalSystem)->Arg(4)->Arg(8);

void BM_KernelSum(benchmark::State& state) {
    const OrthoSystem sys = orthonormal_system(gaussian_moments_21(), 8);
    const Complex z{0.3, 1.1}, w{-0.7, 0.4};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(sys, KernelKind::D, 8, z, w));
}
BENCHMARK(BM_KernelSum);

void BM_HamburgerDisk(benchmark::State& state) {
    const OrthoSystem sys = orthonormal_system(gaussian_moments_21(), 8);
    const Complex z{0.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(hamburger_disk(sys, static_cast<int>(state.range(0)), z));
}
BENCHMARK(BM_HamburgerDisk)->Arg(2)->Arg(8);

void BM_ImageOfRealLine(benchmark::State& state) {
    const MoebiusMap map{{0.4, 1.2}, {-0.3, 0.8}, {1.0, -0.2}, {0.6, 0.9}};
    for (auto _ : state) benchmark::DoNotOptimize(image_of_real_line(map));
}
BENCHMARK(BM_ImageOfRealLine);

void BM_GaussQuadrature(benchmark::State& state) {
    const OrthoSystem sys = orthonormal_system(gaussian_moments_21(), 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(gauss_quadrature(sys, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussQuadrature)->Arg(4)->Arg(8);

void BM_StieltjesRegion(benchmark::State& state) {
    const OrthoSystem sys = orthonormal_system(gaussian_moments_21(), 4);
    const Complex z{0.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(stieltjes_region(sys, 4, z, -6.0));
}
BENCHMARK(BM_StieltjesRegion);

}  // namespace

BENCHMARK_MAIN();
