#include <benchmark/benchmark.h>

#include <random>

#include "hopf_forge/integrals.hpp"
#include "hopf_forge/linalg.hpp"
#include "hopf_forge/report.hpp"
#include "hopf_forge/zoo.hpp"
#include "test_support.hpp"

using namespace hopf_forge;

static void BM_CycMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  const auto a = fixtures::random_cyc(rng, order);
  const auto b = fixtures::random_cyc(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply)->Arg(3)->Arg(15)->Arg(105)->Arg(1000);

static void BM_CycInvert(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  const auto a = fixtures::random_cyc(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(cyc_invert(a));
}
BENCHMARK(BM_CycInvert)->Arg(3)->Arg(15)->Arg(105)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(3);
  const Mat m = fixtures::random_mat(rng, n, 15, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(9)->Arg(25)->Arg(45)->Unit(benchmark::kMillisecond);

static void BM_CheckAxioms(benchmark::State& state) {
  const auto h = state.range(0) == 0
                     ? build_taft(5)
                     : build_tensor(lift_order(build_taft(3), 15), build_cyclic_group_algebra(5, 15));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(h));
}
BENCHMARK(BM_CheckAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TraceFormula(benchmark::State& state) {
  const auto h = build_taft(5);
  const auto pair = make_integral_pair(h);
  std::mt19937 rng(4);
  const Mat f = fixtures::random_mat(rng, h.dim(), h.order(), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radford_trace(h, pair, f, TraceVariant::AntipodeOnSecondLeg));
  }
}
BENCHMARK(BM_TraceFormula)->Unit(benchmark::kMillisecond);

static void BM_Report(benchmark::State& state) {
  const auto h = state.range(0) == 3 ? build_taft(3) : build_taft(5);
  for (auto _ : state) benchmark::DoNotOptimize(make_report(h));
}
BENCHMARK(BM_Report)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
