// Serial reference vs OpenMP product kernel on cluster-variable-sized inputs.

#include <benchmark/benchmark.h>

#include "clusteraut/cluster.hpp"
#include "clusteraut/poly_kernels.hpp"

using namespace clusteraut;

namespace {

// y_n of C(3,3) has a few thousand terms by n = 7
const LaurentPoly& operand(int n) {
  static ClusterSequence seq(Params(3, 3));
  return seq.get(n);
}

void BM_MulSerial(benchmark::State& state) {
  const LaurentPoly& x = operand(static_cast<int>(state.range(0)));
  const LaurentPoly& y = operand(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_serial(x.terms(), y.terms(), 1, 1u << 30));
  state.counters["pairs"] = static_cast<double>(x.size() * y.size());
}

void BM_MulParallel(benchmark::State& state) {
  const LaurentPoly& x = operand(static_cast<int>(state.range(0)));
  const LaurentPoly& y = operand(static_cast<int>(state.range(0)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mul_parallel(x.terms(), y.terms(), 1, 1u << 30));
  state.counters["pairs"] = static_cast<double>(x.size() * y.size());
  state.counters["threads"] = kernels::max_threads();
}

}  // namespace

BENCHMARK(BM_MulSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
