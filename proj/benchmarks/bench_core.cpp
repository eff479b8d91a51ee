#include <benchmark/benchmark.h>

#include "abacus/abacus.hpp"

using namespace abacus;

static void BM_TauE(benchmark::State& state) {
    auto ps = partitions(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& p : ps) benchmark::DoNotOptimize(tau_e(p, 0, 3));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ps.size()));
}
BENCHMARK(BM_TauE)->Arg(10)->Arg(16);

static void BM_TauLRoundTrip(benchmark::State& state) {
    auto ps = partitions(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& p : ps) {
            auto q = tau_l(p, 1, 3, 2);
            benchmark::DoNotOptimize(tau_l_inverse(q.mp, q.charges, 3));
        }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ps.size()));
}
BENCHMARK(BM_TauLRoundTrip)->Arg(10)->Arg(16);

static void BM_GeneralizedCore(benchmark::State& state) {
    auto mps = multipartitions(static_cast<int>(state.range(0)), 2);
    Charges s{0, 1};
    for (auto _ : state)
        for (const auto& mp : mps) benchmark::DoNotOptimize(generalized_core(mp, s, 3));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mps.size()));
}
BENCHMARK(BM_GeneralizedCore)->Arg(6)->Arg(9);

static void BM_CoreViaTranspose(benchmark::State& state) {
    auto mps = multipartitions(static_cast<int>(state.range(0)), 2);
    Charges s{0, 1};
    for (auto _ : state)
        for (const auto& mp : mps) benchmark::DoNotOptimize(core_via_transpose(mp, s, 3));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(mps.size()));
}
BENCHMARK(BM_CoreViaTranspose)->Arg(6)->Arg(9);

static void BM_UglovSet(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(uglov_set({0, 1}, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UglovSet)->Arg(4)->Arg(8);

static void BM_BlocksOf(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(blocks_of(static_cast<int>(state.range(0)), {0, 1}, 4));
}
BENCHMARK(BM_BlocksOf)->Arg(4)->Arg(8);

static void BM_SigmaStar(benchmark::State& state) {
    auto us = uglov_set({0, 1}, 3, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& mp : us)
            for (int i = 0; i < 3; ++i) benchmark::DoNotOptimize(sigma_star(i, mp, {0, 1}, 3));
}
BENCHMARK(BM_SigmaStar)->Arg(6);

static void BM_Realize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(realize_multicharge({-3, -1, 0, 0, 4}, {-2, -2, 0, 1, 3}, 7));
}
BENCHMARK(BM_Realize);

BENCHMARK_MAIN();
