#include "dcfold/rectangle.hpp"

#include <benchmark/benchmark.h>

using namespace dcfold;

static void BM_order_filters_rect(benchmark::State& state) {
  Poset p = young_rect(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(order_filters(p));
}
BENCHMARK(BM_order_filters_rect)->Arg(4)->Arg(6)->Arg(8);

static void BM_order_filters_shifted(benchmark::State& state) {
  Poset p = shifted_young(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(order_filters(p));
}
BENCHMARK(BM_order_filters_shifted)->Arg(4)->Arg(6);

static void BM_d_complete_check(benchmark::State& state) {
  Poset p = young_rect(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_d_complete(p));
}
BENCHMARK(BM_d_complete_check)->Arg(4)->Arg(6);

static void BM_toggle_closure_folded(benchmark::State& state) {
  int cols = static_cast<int>(state.range(0));
  ColoredPoset cp = rectangle_folded(3, cols);
  for (auto _ : state) benchmark::DoNotOptimize(toggle_closure(cp, 0));
}
BENCHMARK(BM_toggle_closure_folded)->Arg(4)->Arg(6);

static void BM_mirror_free_family(benchmark::State& state) {
  int cols = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mirror_free_filters(4, cols));
}
BENCHMARK(BM_mirror_free_family)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
