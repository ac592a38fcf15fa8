#include <benchmark/benchmark.h>

#include "twq/energy.hpp"
#include "twq/energy_tw.hpp"
#include "twq/generators.hpp"
#include "twq/mincycle.hpp"
#include "twq/oracles.hpp"
#include "twq/ratio.hpp"
#include "twq/treedec.hpp"

namespace {

using namespace twq;

WeightedDigraph ktree(std::size_t n, std::size_t k = 2, std::int64_t max_transit = 1) {
  GenOptions o;
  o.n = n;
  o.k = k;
  o.max_transit = max_transit;
  o.seed = 42;
  o.strongly_connected = true;
  return generate_ktree(o);
}

void BM_BuildDecomposition(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_decomposition(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildDecomposition)->RangeMultiplier(10)->Range(100, 100000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_MinCycle(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)));
  TreeDecomposition t = build_decomposition(g);
  for (auto _ : state) benchmark::DoNotOptimize(min_cycle(g, t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinCycle)->RangeMultiplier(10)->Range(100, 10000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_MeanTw(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)));
  TreeDecomposition t = build_decomposition(g);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_value(g, t, Objective::kMean));
}
BENCHMARK(BM_MeanTw)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_MeanKarp(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(karp_mean(g));
}
BENCHMARK(BM_MeanKarp)->RangeMultiplier(10)->Range(100, 1000)->Unit(benchmark::kMillisecond);

void BM_RatioTw(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)), 2, 5);
  TreeDecomposition t = build_decomposition(g);
  for (auto _ : state) benchmark::DoNotOptimize(ratio_value(g, t));
}
BENCHMARK(BM_RatioTw)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_EnergyTw(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)));
  TreeDecomposition t = build_decomposition(g);
  for (auto _ : state) benchmark::DoNotOptimize(energy_values_tw(g, t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnergyTw)->RangeMultiplier(10)->Range(100, 100000)->Complexity()->Unit(benchmark::kMillisecond);

void BM_EnergyGeneral(benchmark::State& state) {
  WeightedDigraph g = ktree(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(energy_values(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnergyGeneral)->RangeMultiplier(10)->Range(100, 1000)->Complexity()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
