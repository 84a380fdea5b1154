#include <benchmark/benchmark.h>

#include "tsys/bijection.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/fuss_catalan.hpp"

namespace {

void BM_EnumerateSystems(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  tsys::enumerate_all(n);  // warm the shared cache once
  for (auto _ : state) {
    const auto& all = tsys::enumerate_all(n);
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(BM_EnumerateSystems)->Arg(6)->Arg(8);

void BM_CompatibilityModes(benchmark::State& state) {
  const auto mode = static_cast<tsys::CompatMode>(state.range(0));
  const auto& all = tsys::enumerate_all(5);
  for (auto _ : state) {
    int count = 0;
    for (const auto& a : all)
      for (const auto& m : all)
        count += tsys::is_compatible(a, m, mode);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CompatibilityModes)
    ->Arg(static_cast<int>(tsys::CompatMode::definition))
    ->Arg(static_cast<int>(tsys::CompatMode::core))
    ->Arg(static_cast<int>(tsys::CompatMode::hull));

void BM_CountRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    tsys::CountTable table;  // fresh table so the fill is measured
    benchmark::DoNotOptimize(table.d(n, 0));
  }
}
BENCHMARK(BM_CountRecurrence)->Arg(30)->Arg(100);

void BM_SigmaRoundTrip(benchmark::State& state) {
  const auto& all = tsys::enumerate_all(7);
  for (auto _ : state) {
    for (const auto& s : all)
      benchmark::DoNotOptimize(tsys::sigma_inverse(tsys::sigma(s)));
  }
}
BENCHMARK(BM_SigmaRoundTrip);

void BM_FussCatalan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tsys::fuss_catalan(200, 3, 1));
}
BENCHMARK(BM_FussCatalan);

}  // namespace

BENCHMARK_MAIN();
