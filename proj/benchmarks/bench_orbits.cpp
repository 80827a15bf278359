#include "dcfold/folding.hpp"
#include "dcfold/minuscule.hpp"

#include <benchmark/benchmark.h>

using namespace dcfold;

static void BM_positive_roots_e7(benchmark::State& state) {
  RootSystem rs(LieType::E, 7);
  for (auto _ : state) benchmark::DoNotOptimize(rs.positive_roots());
}
BENCHMARK(BM_positive_roots_e7);

static void BM_weyl_orbit_e6(benchmark::State& state) {
  RootSystem rs(LieType::E, 6);
  Weight lambda = rs.fundamental_weight(1);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_orbit(rs, lambda));
}
BENCHMARK(BM_weyl_orbit_e6);

static void BM_bridge_a6(benchmark::State& state) {
  RootSystem rs(LieType::A, 6);
  for (auto _ : state) benchmark::DoNotOptimize(build_minuscule_poset(rs, 3));
}
BENCHMARK(BM_bridge_a6);

static void BM_bridge_e7(benchmark::State& state) {
  RootSystem rs(LieType::E, 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_minuscule_poset(rs, 6));
}
BENCHMARK(BM_bridge_e7);

static void BM_folded_orbit_e6(benchmark::State& state) {
  RootSystem rs(LieType::E, 6);
  Folding fd = make_folding(rs, diagram_flip(rs));
  Weight lambda = rs.fundamental_weight(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_folded_orbit(fd, lambda));
}
BENCHMARK(BM_folded_orbit_e6);

static void BM_full_folded_check_a5(benchmark::State& state) {
  RootSystem rs(LieType::A, 5);
  std::vector<int> sigma = diagram_flip(rs);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_folded_isomorphism(rs, 2, sigma));
}
BENCHMARK(BM_full_folded_check_a5);

BENCHMARK_MAIN();
