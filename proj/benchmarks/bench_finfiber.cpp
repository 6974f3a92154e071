#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "finfiber/finfiber.hpp"

using namespace finfiber;

static void BM_ProjectCompound(benchmark::State& state) {
  const Rate rate(0.1);
  FinancialEvent e{2.0, 121.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_compound(e, rate));
    e.time += 1e-9;
  }
}
BENCHMARK(BM_ProjectCompound);

static void BM_RateIsomorphism(benchmark::State& state) {
  const Rate from(0.1), to(0.21);
  const FinancialEvent e{2.0, 121.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rate_isomorphism(e, from, to));
  }
}
BENCHMARK(BM_RateIsomorphism);

static void BM_FdDerivative(benchmark::State& state) {
  const auto u = compound_law(Rate(0.1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_derivative(u.evaluator(), 0.5));
  }
}
BENCHMARK(BM_FdDerivative);

static void BM_TraceTest(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Rate rate(0.1);
  const CapitalEvolution M([](double t) { return std::pow(1.1, t) * t; }, std::nullopt,
                           Interval{-5, 5}, linspace(-5, 5, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_test(M, rate, Interval{-5, 5}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TraceTest)->RangeMultiplier(4)->Range(64, 1 << 16)->Complexity();

static void BM_GlobalConnection(benchmark::State& state) {
  const auto u = simple_law(0.1);
  const FinancialEvent e{1.0, 110.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(global_connection(u, 1.0, e));
  }
}
BENCHMARK(BM_GlobalConnection);

BENCHMARK_MAIN();
