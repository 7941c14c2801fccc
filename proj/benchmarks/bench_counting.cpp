#include <benchmark/benchmark.h>

#include "prodfree/constructions.hpp"
#include "prodfree/density.hpp"
#include "prodfree/dfa.hpp"

using namespace prodfree;

static void BM_LayerCountsOddOccurrence(benchmark::State& state) {
  const Dfa d = odd_occurrence(GammaSpec(Alphabet("abc"), "ab"));
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dfa_layer_counts(d, horizon));
}
BENCHMARK(BM_LayerCountsOddOccurrence)->Arg(64)->Arg(256)->Arg(1024);

static void BM_ProfileAsymmetricZ(benchmark::State& state) {
  const auto t = asymmetric_triple(Alphabet("ab"), 4, Rational(1, 10));
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(profile(t.z, horizon));
}
BENCHMARK(BM_ProfileAsymmetricZ)->Arg(64)->Arg(256);

static void BM_RefinedCount(benchmark::State& state) {
  const auto t = asymmetric_triple(Alphabet("ab"), 4, Rational(1, 10));
  std::vector<std::size_t> ls{4, 9, 17, 33};
  for (auto _ : state) benchmark::DoNotOptimize(dfa_refined_count(t.z, 64, ls));
}
BENCHMARK(BM_RefinedCount);

static void BM_BanachEstimate(benchmark::State& state) {
  const auto p = profile(odd_occurrence(GammaSpec(Alphabet("ab"), "a")),
                         static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(upper_banach(p, 8));
}
BENCHMARK(BM_BanachEstimate)->Arg(64)->Arg(128);
