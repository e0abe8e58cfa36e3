#include <benchmark/benchmark.h>

#include "localelab/constructions.hpp"
#include "localelab/sublocale.hpp"

using namespace localelab;

static void BM_ValidateBoolean(benchmark::State& state) {
  const FiniteFrame b = boolean(static_cast<int>(state.range(0)));
  const OrderMatrix leq = b.order();
  for (auto _ : state) benchmark::DoNotOptimize(validate_frame(leq));
  state.SetComplexityN(b.size());
}
BENCHMARK(BM_ValidateBoolean)->DenseRange(2, 6)->Complexity();

static void BM_HeytingLaws(benchmark::State& state) {
  const FiniteFrame f = downset_frame(Poset::chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(heyting_laws_check(f));
}
BENCHMARK(BM_HeytingLaws)->DenseRange(2, 10, 4);

static void BM_EnumerateSublocales(benchmark::State& state) {
  const FiniteFrame f = boolean(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sublocales(f));
  state.counters["sublocales"] = static_cast<double>(enumerate_sublocales(f).size());
}
BENCHMARK(BM_EnumerateSublocales)->DenseRange(1, 4);

static void BM_Booleanization(benchmark::State& state) {
  const FiniteFrame f = downset_frame(Poset::antichain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(booleanization(f));
}
BENCHMARK(BM_Booleanization)->DenseRange(2, 6, 2);
