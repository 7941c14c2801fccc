#include <benchmark/benchmark.h>

#include "prodfree/constructions.hpp"
#include "prodfree/productfree.hpp"
#include "prodfree/proofkit.hpp"

using namespace prodfree;

static void BM_CheckExplicitGreedy(benchmark::State& state) {
  const auto s = greedy_random_productfree(Alphabet("ab"), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_explicit(s));
}
BENCHMARK(BM_CheckExplicitGreedy)->Arg(10)->Arg(14)->Arg(16);

static void BM_CheckRegularOddOccurrence(benchmark::State& state) {
  const Dfa d = odd_occurrence(GammaSpec(Alphabet("abcd"), "ac"));
  for (auto _ : state) benchmark::DoNotOptimize(check_regular(d));
}
BENCHMARK(BM_CheckRegularOddOccurrence);

static void BM_AsymmetricTriple(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(asymmetric_triple(Alphabet("ab"), n, Rational(1, 10)));
}
BENCHMARK(BM_AsymmetricTriple)->Arg(4)->Arg(6);

static void BM_GreedyConstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_random_productfree(Alphabet("ab"), n, 7));
}
BENCHMARK(BM_GreedyConstruction)->Arg(8)->Arg(12);

static void BM_ExtractAndSweep(benchmark::State& state) {
  const auto s = greedy_random_productfree(Alphabet("ab"), 12, 3).with_horizon(64);
  for (auto _ : state) {
    auto ex = extract_lsequence(s, Rational(1, 10), 64);
    if (!ex.sequence.empty()) {
      benchmark::DoNotOptimize(sweep_window_certificates(profile(s, 64), ex.sequence, 16));
    }
  }
}
BENCHMARK(BM_ExtractAndSweep);
