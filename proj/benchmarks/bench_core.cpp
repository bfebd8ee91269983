#include <benchmark/benchmark.h>

#include "wlpole/boundary.hpp"
#include "wlpole/cancel.hpp"
#include "wlpole/poles.hpp"
#include "wlpole/positroid.hpp"

using namespace wlpole;

static void BM_Enumerate(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0)), n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate(k, n));
}
BENCHMARK(BM_Enumerate)->Args({2, 8})->Args({3, 9})->Args({3, 10});

static void BM_Necklace(benchmark::State& st) {
  const auto ws = enumerate(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st)
    for (const auto& w : ws) benchmark::DoNotOptimize(necklace(Matroid::transversal(w.n(), w.set_system())));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(ws.size()));
}
BENCHMARK(BM_Necklace)->Args({2, 8})->Args({3, 9});

static void BM_RSweep(benchmark::State& st) {
  const auto ws = enumerate(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st)
    for (const auto& w : ws) benchmark::DoNotOptimize(check_r_equalities(w));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(ws.size()));
}
BENCHMARK(BM_RSweep)->Args({1, 8})->Args({2, 8});

static void BM_FactorCodim(benchmark::State& st) {
  const auto ws = enumerate(2, 7);
  for (auto _ : st)
    for (const auto& w : ws)
      for (const auto& f : r_poly_edge(w).factors) benchmark::DoNotOptimize(factor_codim(w, f, 1));
}
BENCHMARK(BM_FactorCodim)->Unit(benchmark::kMillisecond);

static void BM_BoundaryWithoutPole(benchmark::State& st) {
  const auto ws = enumerate(2, 7);
  for (auto _ : st)
    for (const auto& w : ws) benchmark::DoNotOptimize(boundary_without_pole(w));
}
BENCHMARK(BM_BoundaryWithoutPole)->Unit(benchmark::kMillisecond);

static void BM_AmplitudeReport(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0)), n = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(amplitude_report(k, n, 1, 10, 1));
}
BENCHMARK(BM_AmplitudeReport)->Args({1, 6})->Args({2, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
