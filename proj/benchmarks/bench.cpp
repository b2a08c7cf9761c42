#include <benchmark/benchmark.h>

#include "ostar/construction.hpp"
#include "ostar/density.hpp"
#include "ostar/monte_carlo.hpp"
#include "ostar/opt.hpp"
#include "ostar/search.hpp"

using namespace ostar;

static void BM_CountFastRandom(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = random_oriented_graph(n, 1, 0.3);
    const StarSpec spec(3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(count_fast(g, spec));
}
BENCHMARK(BM_CountFastRandom)->Arg(20)->Arg(40)->Arg(80);

static void BM_CountFastConstruction(benchmark::State& state) {
    const StarSpec spec(4, 2);
    const auto g = optimal_construction(spec, static_cast<std::size_t>(state.range(0)), BuildMode::Balanced);
    for (auto _ : state) benchmark::DoNotOptimize(count_fast(g, spec));
}
BENCHMARK(BM_CountFastConstruction)->Arg(70)->Arg(140)->Arg(280);

static void BM_CountOracle(benchmark::State& state) {
    const auto g = random_oriented_graph(static_cast<std::size_t>(state.range(0)), 2, 0.3);
    const StarSpec spec(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(count_oracle(g, spec));
}
BENCHMARK(BM_CountOracle)->Arg(10)->Arg(20);

static void BM_SolveOpt(benchmark::State& state) {
    const StarSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_opt(spec).opt_value);
}
BENCHMARK(BM_SolveOpt)->Args({2, 1})->Args({4, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
    const StarSpec spec(2, 1);
    const auto g = optimal_construction(spec, 280, BuildMode::Balanced);
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_s(g, spec, 1u << 16, 3).estimate);
    state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_MonteCarlo);

static void BM_Exhaustive(benchmark::State& state) {
    const StarSpec spec(2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_max(static_cast<std::size_t>(state.range(0)), spec).best_count);
}
BENCHMARK(BM_Exhaustive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
