#include "homcat/cech.hpp"
#include "homcat/cellccc.hpp"
#include "homcat/hyper.hpp"
#include "homcat/ratmatrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace homcat;

static void BM_rank(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> v(-5, 5);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    exactalg::RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(v(rng), 1 + (i % 3));
    for (auto _ : state) benchmark::DoNotOptimize(exactalg::rank(m));
}
BENCHMARK(BM_rank)->Arg(16)->Arg(48)->Arg(96);

static void BM_rgamma_line_bundle(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto c = lbcx::LBComplex::line_bundle(m, -2 * m - 2);
    for (auto _ : state) benchmark::DoNotOptimize(lbcx::rgamma(c));
}
BENCHMARK(BM_rgamma_line_bundle)->Arg(2)->Arg(3)->Arg(4);

static void BM_rgamma_koszul_pair(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    hyper::HyperplaneData h(m + 1);
    auto ks = hyper::monad(h, lbcx::LBComplex::line_bundle(m, 0));
    for (auto _ : state) benchmark::DoNotOptimize(lbcx::rgamma(ks));
}
BENCHMARK(BM_rgamma_koszul_pair)->Arg(1)->Arg(2)->Arg(3);

static void BM_spherical_check(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    hyper::HyperplaneData h(n);
    for (auto _ : state) benchmark::DoNotOptimize(hyper::check_spherical(h));
}
BENCHMARK(BM_spherical_check)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_cell_convolve(benchmark::State& state) {
    auto t = cellccc::build_generator(cellccc::Generator::Twist);
    for (auto _ : state) benchmark::DoNotOptimize(cellccc::convolve(t, t));
}
BENCHMARK(BM_cell_convolve);

BENCHMARK_MAIN();
