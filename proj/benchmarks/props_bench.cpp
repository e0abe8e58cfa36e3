#include <benchmark/benchmark.h>

#include "localelab/constructions.hpp"
#include "localelab/props.hpp"

using namespace localelab;

namespace {

// A fixed non-De Morgan frame of moderate size: the downsets of a 2+2 fence.
FiniteFrame fence() {
  OrderMatrix leq(4, std::vector<bool>(4));
  for (int i = 0; i < 4; ++i) leq[i][i] = true;
  leq[0][2] = leq[0][3] = leq[1][3] = true;
  return downset_frame(Poset::validated(leq));
}

}  // namespace

static void BM_AllProperties(benchmark::State& state) {
  const FiniteFrame f = fence();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_properties(f, "fence"));
}
BENCHMARK(BM_AllProperties);

static void BM_EdByQuantifierRoute(benchmark::State& state) {
  const FiniteFrame f = boolean(4);
  const PropsConfig config{static_cast<int>(state.range(0)), kDefaultSublocaleBudget};
  for (auto _ : state) benchmark::DoNotOptimize(is_ed(f, config));
  state.SetLabel(state.range(0) == 0 ? "closure" : "enumeration");
}
BENCHMARK(BM_EdByQuantifierRoute)->Arg(0)->Arg(64);

static void BM_HereditaryIed(benchmark::State& state) {
  const FiniteFrame f = downset_frame(Poset::chain(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_hereditary(f, Property::kIed));
}
BENCHMARK(BM_HereditaryIed)->DenseRange(2, 6, 2);

static void BM_LargestDenseIed(benchmark::State& state) {
  const FiniteFrame f = fence();
  for (auto _ : state) benchmark::DoNotOptimize(largest_dense_ied(f));
}
BENCHMARK(BM_LargestDenseIed);
