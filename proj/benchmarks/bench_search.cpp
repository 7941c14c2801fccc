#include <benchmark/benchmark.h>

#include "prodfree/search.hpp"

using namespace prodfree;

static void BM_SearchBinary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = max_productfree(Alphabet("ab"), n).nodes;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchBinary)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_SearchTernary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_productfree(Alphabet("abc"), n));
}
BENCHMARK(BM_SearchTernary)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveVsBranchAndBound(benchmark::State& state) {
  const auto method = state.range(0) ? SearchMethod::branch_and_bound : SearchMethod::exhaustive;
  for (auto _ : state)
    benchmark::DoNotOptimize(max_productfree(Alphabet("ab"), 3, Objective::mean, 100'000'000, method));
}
BENCHMARK(BM_ExhaustiveVsBranchAndBound)->Arg(0)->Arg(1);
