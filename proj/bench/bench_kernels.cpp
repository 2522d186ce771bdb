// Serial reference against the OpenMP kernel for the three parallel sweeps.

#include <benchmark/benchmark.h>

#include "thompson/baker.hpp"
#include "thompson/corpus.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/relations.hpp"

using namespace thompson;

namespace {

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rel::sweep_families_serial(static_cast<std::size_t>(state.range(0))));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rel::sweep_families(static_cast<std::size_t>(state.range(0))));
}

dyn::TreePair bench_element() {
  corpus::Rng rng(4242);
  return corpus::random_tree_pair(rng, 8);
}

void BM_CensusSerial(benchmark::State& state) {
  auto t = bench_element();
  for (auto _ : state)
    benchmark::DoNotOptimize(dyn::census_serial(t, 4, static_cast<std::size_t>(state.range(0))));
}

void BM_CensusParallel(benchmark::State& state) {
  auto t = bench_element();
  for (auto _ : state)
    benchmark::DoNotOptimize(dyn::census(t, 4, static_cast<std::size_t>(state.range(0))));
}

void BM_NecklacesSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(baker::enumerate_periodic_orbits_serial(static_cast<std::size_t>(state.range(0))));
}

void BM_NecklacesParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(baker::enumerate_periodic_orbits(static_cast<std::size_t>(state.range(0))));
}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NecklacesSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NecklacesParallel)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
