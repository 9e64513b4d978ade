#include <benchmark/benchmark.h>

#include "lucas3/census.hpp"
#include "lucas3/modeval.hpp"
#include "lucas3/periodicity.hpp"
#include "lucas3/predictor.hpp"

using namespace lucas3;

static void doubling_eval(benchmark::State& state) {
  LucasParams params(1);
  Modulus3Pow mod = Modulus3Pow::pow3(static_cast<int>(state.range(0)));
  ExactInt n = ExactInt(1) << 62;
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_mod(params, SequenceKind::U, n, mod));
}
BENCHMARK(doubling_eval)->Arg(5)->Arg(12)->Arg(24);

static void census_full_period(benchmark::State& state) {
  LucasParams params(1);
  Modulus3Pow mod = Modulus3Pow::pow3(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Census c = census(params, SequenceKind::U, mod);
    benchmark::DoNotOptimize(c.period);
  }
}
BENCHMARK(census_full_period)->Arg(6)->Arg(9)->Arg(11);

static void census_chunked(benchmark::State& state) {
  LucasParams params(1);
  Modulus3Pow mod = Modulus3Pow::pow3(9);
  CensusOptions opts;
  opts.chunks = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Census c = census(params, SequenceKind::U, mod, opts);
    benchmark::DoNotOptimize(c.period);
  }
}
BENCHMARK(census_chunked)->Arg(1)->Arg(8)->Arg(64);

static void period_brute(benchmark::State& state) {
  LucasParams params(1);
  Modulus3Pow mod = Modulus3Pow::pow3(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(period_bruteforce(params, SequenceKind::U, mod).h);
}
BENCHMARK(period_brute)->Arg(8)->Arg(11);

static void predicted_histogram_bench(benchmark::State& state) {
  LucasParams params(1);
  Modulus3Pow mod = Modulus3Pow::pow3(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto hist = predicted_histogram(params, SequenceKind::U, mod);
    benchmark::DoNotOptimize(hist.size());
  }
}
BENCHMARK(predicted_histogram_bench)->Arg(6)->Arg(9)->Arg(11);

BENCHMARK_MAIN();
