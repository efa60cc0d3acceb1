#include <benchmark/benchmark.h>

#include <cmath>

#include "symgauss/closedform.hpp"
#include "symgauss/equilibrium.hpp"
#include "symgauss/highrank.hpp"
#include "symgauss/oracle.hpp"
#include "symgauss/rootsys.hpp"
#include "symgauss/special.hpp"

namespace {

using namespace symgauss;

void BM_Dilog(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        x += dilog(0.5) + dilog(-0.75);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_Dilog);

void BM_AdaptiveQuadLogSingularity(benchmark::State& state) {
    const auto f = [](double x) { return std::log1p(-std::exp(-2.0 * x)); };
    for (auto _ : state) {
        const double v = adaptive_quad(f, {0.0, 1.0}, 1e-10);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_AdaptiveQuadLogSingularity);

void BM_LogZaTypeiv(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    const auto desc = typeiv_space(RootFamily::B, rank);
    const auto g = GaussParam::from_sigma(0.7);
    for (auto _ : state) {
        const double v = log_Za_typeiv(desc, g);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(rank);
}
BENCHMARK(BM_LogZaTypeiv)->Arg(50)->Arg(200)->Arg(500)->Complexity();

void BM_FiniteRankF(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const double v = F_finite_rank(LimitFamily::C, rank, 1.0);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(rank);
}
BENCHMARK(BM_FiniteRankF)->Arg(100)->Arg(400)->Complexity();

void BM_LimitF(benchmark::State& state) {
    for (auto _ : state) {
        const double v = F_limit(LimitFamily::A, 1.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_LimitF);

void BM_MinimizeEnergy(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    const EnergyKernel kernel{KernelVariant::C, 4.0, 1.0, 2.0, 1.0};
    for (auto _ : state) {
        const auto res = minimize_energy(rank, kernel);
        benchmark::DoNotOptimize(res.energy);
    }
    state.SetComplexityN(rank);
}
BENCHMARK(BM_MinimizeEnergy)->Arg(25)->Arg(50)->Arg(100)
    ->Unit(benchmark::kMillisecond)->Complexity();

void BM_McRadial(benchmark::State& state) {
    const auto desc = typeiv_space(RootFamily::A, 2);
    const auto g = GaussParam::from_sigma(0.5);
    const long long n = state.range(0);
    for (auto _ : state) {
        const auto est = mc_radial(desc, g, n, 12345);
        benchmark::DoNotOptimize(est.log_value);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_McRadial)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_QuadRadial(benchmark::State& state) {
    const auto desc = typeiv_space(RootFamily::B, 2);
    const auto g = GaussParam::from_sigma(0.8);
    for (auto _ : state) {
        const double v = quad_radial(desc, g, 1e-8);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_QuadRadial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
