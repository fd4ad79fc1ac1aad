#include <benchmark/benchmark.h>

#include "grpstat/actions.hpp"
#include "grpstat/harness.hpp"
#include "grpstat/rc.hpp"
#include "grpstat/stats.hpp"

using namespace grpstat;

namespace {

void BM_SchreierSimsM24(benchmark::State& state) {
  const auto m24 = act_m24();
  for (auto _ : state) {
    const PermGroup G = m24.group();  // fresh group, chain built on demand
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_SchreierSimsM24)->Unit(benchmark::kMillisecond);

void BM_SchreierSimsPGL34(benchmark::State& state) {
  const auto inst = act_subspaces(3, 2, 2, 1, LinearGroup::gl);
  for (auto _ : state) {
    const PermGroup G = inst.group();
    benchmark::DoNotOptimize(G.order());
  }
}
BENCHMARK(BM_SchreierSimsPGL34)->Unit(benchmark::kMillisecond);

void BM_IrredundantDiagonal(benchmark::State& state) {
  const PermGroup G = act_diagonal(diagonal_spec_alt5(2, true)).group();
  (void)G.order();
  for (auto _ : state) benchmark::DoNotOptimize(stat_I(G).value);
}
BENCHMARK(BM_IrredundantDiagonal)->Unit(benchmark::kMillisecond);

void BM_HeightPGL34(benchmark::State& state) {
  const PermGroup G = act_subspaces(3, 2, 2, 1, LinearGroup::gl).group();
  (void)G.order();
  for (auto _ : state) benchmark::DoNotOptimize(stat_H(G).value);
}
BENCHMARK(BM_HeightPGL34)->Unit(benchmark::kMillisecond);

void BM_IrredundantM24(benchmark::State& state) {
  const PermGroup G = act_m24().group();
  (void)G.order();
  for (auto _ : state) benchmark::DoNotOptimize(stat_I(G).value);
}
BENCHMARK(BM_IrredundantM24)->Unit(benchmark::kMillisecond);

void BM_RelationalComplexity(benchmark::State& state) {
  const PermGroup G = catalog_entry(state.range(0) == 0 ? "pgl_2_5" : "agl_3_2").build().group();
  (void)G.order();
  for (auto _ : state) benchmark::DoNotOptimize(rc_exact(G).value);
}
BENCHMARK(BM_RelationalComplexity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DefaultSuite(benchmark::State& state) {
  for (auto _ : state) {
    auto config = suite_config("default");
    benchmark::DoNotOptimize(run_suite(config).results.size());
  }
}
BENCHMARK(BM_DefaultSuite)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
