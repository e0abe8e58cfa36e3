#include <benchmark/benchmark.h>

#include "localelab/canonical.hpp"
#include "localelab/constructions.hpp"

using namespace localelab;

static void BM_EnumeratePosets(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(m));
}
BENCHMARK(BM_EnumeratePosets)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_EnumerateCorpus(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_corpus(m));
}
BENCHMARK(BM_EnumerateCorpus)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CanonicalHash(benchmark::State& state) {
  const FiniteFrame f = boolean(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_hash(f));
}
BENCHMARK(BM_CanonicalHash)->DenseRange(2, 5);
BENCHMARK_MAIN();
