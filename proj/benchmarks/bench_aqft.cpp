#include "aqft/adders.hpp"
#include "aqft/analysis.hpp"
#include "aqft/pipeline.hpp"
#include "aqft/qft.hpp"

#include <benchmark/benchmark.h>

using namespace aqft;

static void BM_BuildAqft(benchmark::State& state) {
  const auto p = AqftParams::from_epsilon(static_cast<int>(state.range(0)), 1e-3);
  for (auto _ : state) benchmark::DoNotOptimize(build_aqft(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildAqft)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_Census(benchmark::State& state) {
  const auto a = build_aqft(AqftParams::from_epsilon(static_cast<int>(state.range(0)), 1e-3));
  for (auto _ : state) benchmark::DoNotOptimize(census(a));
}
BENCHMARK(BM_Census)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

static void BM_AdderSimulation(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const auto c = build_adder({w, UncomputeStyle::MeasureBased});
  for (auto _ : state) {
    SparseState s(c.num_qubits());
    for (int q : c.reg("x").qubits) s.apply_x(q);
    benchmark::DoNotOptimize(simulate(c, std::move(s), MeasurementPolicy::seeded(1)));
  }
}
BENCHMARK(BM_AdderSimulation)->DenseRange(4, 16, 4);

// H on every qubit of a register already in superposition exercises the merge path.
static void BM_SparseHadamard(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  SparseState base(40);
  for (int q = 0; q < k; ++q) base.apply_h(q);
  for (auto _ : state) {
    SparseState s = base;
    for (int q = 0; q < k; ++q) s.apply_h(q);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * k * (std::int64_t{1} << k));
}
BENCHMARK(BM_SparseHadamard)->DenseRange(8, 16, 4);

static void BM_ArtifactOperator(benchmark::State& state) {
  const auto a = build_aqft(AqftParams::from_bits(static_cast<int>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(artifact_operator(a, MeasurementPolicy::seeded(1)));
}
BENCHMARK(BM_ArtifactOperator)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
