// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "lsseq/discrepancy.hpp"
#include "lsseq/points.hpp"

namespace {

void BM_ValuesSerial(benchmark::State& state) {
  lsseq::LsSequence s(lsseq::Params::parse("2,1,1"));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.values_serial(1, n + 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ValuesParallel(benchmark::State& state) {
  lsseq::LsSequence s(lsseq::Params::parse("2,1,1"));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.values(1, n + 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<double> sample(std::int64_t n) {
  lsseq::LsSequence s(lsseq::Params::parse("2,1,1"));
  return s.values(1, static_cast<std::uint64_t>(n) + 1);
}

void BM_DiscrepancySerial(benchmark::State& state) {
  const auto v = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lsseq::discrepancy_report_serial(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DiscrepancyParallel(benchmark::State& state) {
  const auto v = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lsseq::discrepancy_report(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ValuesSerial)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValuesParallel)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscrepancySerial)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscrepancyParallel)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
