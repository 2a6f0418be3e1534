#include <benchmark/benchmark.h>

#include "cuspcoeff/character.hpp"
#include "cuspcoeff/cusps.hpp"

using namespace cuspcoeff;

static void BM_EnumerateCusps(benchmark::State& state) {
    i64 N = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_cusps(N));
}
BENCHMARK(BM_EnumerateCusps)->Arg(60)->Arg(720);

static void BM_Factor(benchmark::State& state) {
    i64 n = (1LL << 40) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_Factor);

static void BM_CharacterTable(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(DirichletCharacter::all_mod(state.range(0)));
}
BENCHMARK(BM_CharacterTable)->Arg(36)->Arg(360);

BENCHMARK_MAIN();
