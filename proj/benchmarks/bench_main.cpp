#include <benchmark/benchmark.h>

#include "taftinv/downup.hpp"
#include "taftinv/invariants.hpp"
#include "taftinv/series.hpp"

using namespace taftinv;

namespace {

ActionSpec spec_for(int n) { return make_spec(n, n - 1, Family::Case1, SqrtChoice::Principal); }

PBWElement dense(int d) {
  PBWElement e;
  long c = 1;
  for (const auto& m : graded_basis(d)) e.add(m, CycNum(c++));
  return e;
}

}  // namespace

static void BM_PbwMul(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DownUp alg(spec_for(4));
  const PBWElement a = dense(d), b = dense(d);
  for (auto _ : state) benchmark::DoNotOptimize(alg.mul(a, b));
}
BENCHMARK(BM_PbwMul)->Arg(4)->Arg(8)->Arg(12);

static void BM_FullInvariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvariantEngine eng(spec_for(n));
  for (auto _ : state) benchmark::DoNotOptimize(eng.full_invariants(4 * n));
}
BENCHMARK(BM_FullInvariants)->Arg(3)->Arg(5)->Arg(7);

static void BM_FullInvariantsDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const InvariantEngine eng(spec_for(n));
  for (auto _ : state) benchmark::DoNotOptimize(eng.full_invariants_dense(4 * n));
}
BENCHMARK(BM_FullInvariantsDense)->Arg(3)->Arg(5);

static void BM_Molien(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ActionSpec s = spec_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(molien(s));
}
BENCHMARK(BM_Molien)->Arg(6)->Arg(10)->Arg(16);

static void BM_StanleyTest(benchmark::State& state) {
  const QRatFn h = molien(spec_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(stanley_test(h));
}
BENCHMARK(BM_StanleyTest)->Arg(10)->Arg(16);
BENCHMARK_MAIN();
