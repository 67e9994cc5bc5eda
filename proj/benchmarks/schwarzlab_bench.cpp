#include <benchmark/benchmark.h>

#include "schwarzlab/families.hpp"
#include "schwarzlab/inequalities.hpp"
#include "schwarzlab/region.hpp"
#include "schwarzlab/series.hpp"

namespace {

using namespace schwarzlab;

TruncatedSeries dense_series(std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; ++k) s[k] = {1.0 / (k + 1), 0.5 / (k + 2)};
  return s;
}

void BM_Mul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries f = dense_series(n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, f));
}
BENCHMARK(BM_Mul)->Arg(12)->Arg(64);

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TruncatedSeries outer = dense_series(n);
  TruncatedSeries inner = dense_series(n);
  inner[0] = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(compose(outer, inner));
}
BENCHMARK(BM_Compose)->Arg(12)->Arg(64);

void BM_ExpandBlaschke(benchmark::State& state) {
  const auto corpus = sample_schwarz(42, 64, 6);
  for (auto _ : state) {
    for (const auto& g : corpus) {
      benchmark::DoNotOptimize(expand_schwarz(g, kDefaultOrder));
    }
  }
}
BENCHMARK(BM_ExpandBlaschke);

void BM_B3Region(benchmark::State& state) {
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(b3_region(0.5, kDefaultAngles, resolution));
  }
}
BENCHMARK(BM_B3Region)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_AttainabilityScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(attainability_scan(42, 100));
  }
}
BENCHMARK(BM_AttainabilityScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
