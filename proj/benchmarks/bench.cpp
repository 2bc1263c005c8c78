#include <benchmark/benchmark.h>

#include <cmath>

#include "berndecay/bounds.hpp"
#include "berndecay/densefun.hpp"
#include "berndecay/graphs.hpp"
#include "berndecay/quadrature.hpp"
#include "berndecay/specfun.hpp"

using namespace berndecay;

static void BM_LnGamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::ln_gamma(x));
        x = x < 1e5 ? x * 1.0001 : 0.1;
    }
}
BENCHMARK(BM_LnGamma);

static void BM_UpperIncGamma(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::upper_inc_gamma(0.5, x));
        x = x < 20.0 ? x + 0.1 : 0.1;
    }
}
BENCHMARK(BM_UpperIncGamma);

static void BM_LnLowerIncGammaLarge(benchmark::State& state) {
    const double s = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::ln_lower_inc_gamma(s, 0.5 * s));
    }
}
BENCHMARK(BM_LnLowerIncGammaLarge)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_IntegrateSingular(benchmark::State& state) {
    for (auto _ : state) {
        auto r = quad::integrate([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_IntegrateSingular);

static void BM_IntegrateTail(benchmark::State& state) {
    for (auto _ : state) {
        auto r = quad::integrate_to_infinity(
            [](double t) { return std::exp(-0.5 * t) * std::pow(t, -1.5); }, 4.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_IntegrateTail);

static void BM_ClosedFracBound(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const FracPowerSpec half(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::frac_bound_closed_semidef(half, 4.0, d).value);
    }
}
BENCHMARK(BM_ClosedFracBound)->Arg(4)->Arg(64)->Arg(1024);

static void BM_QuadBoundSemidef(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto levy = bounds::levy_frac_power(FracPowerSpec(0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::bernstein_bound_semidef(levy, 4.0, d).value);
    }
}
BENCHMARK(BM_QuadBoundSemidef)->Arg(2)->Arg(10)->Arg(50);

static void BM_QuadBoundPosdef(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto levy = bounds::levy_frac_power(FracPowerSpec(0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            bounds::bernstein_bound_posdef(levy, 0.0193, 7.98, d).value);
    }
}
BENCHMARK(BM_QuadBoundPosdef)->Arg(2)->Arg(10)->Arg(30);

static void BM_StieltjesBound(benchmark::State& state) {
    const FracPowerSpec half(0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::stieltjes_bound(half, 0.0193, 7.98, 8.0, 12).value);
    }
}
BENCHMARK(BM_StieltjesBound);

static void BM_BfsGrid(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto A = graphs::grid2d_matrix(N, 0.0);
    for (auto _ : state) {
        auto d = graphs::bfs_distances(A, 0);
        benchmark::DoNotOptimize(d.dist.back());
    }
}
BENCHMARK(BM_BfsGrid)->Arg(31)->Arg(64);

static void BM_CycleSqrtEntry(benchmark::State& state) {
    int i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(densefun::cycle_sqrt_entry(10001, i, 0));
        i = i % 10000 + 1;
    }
}
BENCHMARK(BM_CycleSqrtEntry);

static void BM_EigSymGrid(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto A = graphs::grid2d_matrix(N, 1.0);
    for (auto _ : state) {
        auto eig = densefun::eig_sym(A);
        benchmark::DoNotOptimize(eig.values[0]);
    }
}
BENCHMARK(BM_EigSymGrid)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
