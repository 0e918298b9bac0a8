#include <benchmark/benchmark.h>

#include "cdlat/genkit.hpp"
#include "cdlat/islands.hpp"

using namespace cdlat::islands;

static void BM_EnumerateIslands(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const HeightFunction h = cdlat::gen::random_heights(3, Board{side, side}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_islands(h));
}
BENCHMARK(BM_EnumerateIslands)->RangeMultiplier(2)->Range(2, 16);

static void BM_Oracle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_islands_oracle(m, n, 16));
}
BENCHMARK(BM_Oracle)->Args({3, 3})->Args({3, 4})->Args({2, 6})->Args({4, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_Construct(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_islands_construct(side, side));
}
BENCHMARK(BM_Construct)->RangeMultiplier(2)->Range(2, 64);
