#include <benchmark/benchmark.h>

#include "capelli/gln.hpp"
#include "capelli/shifted_schur.hpp"
#include "capelli/young_reps.hpp"

using namespace capelli;

static void BM_WeylMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  NCMatrix e = e_matrix(n, n);
  WeylOperator a = e(1, 1) + e(1, 2) * e(2, 1);
  WeylOperator b = e(2, 2) * e(1, 1) + e(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_WeylMultiply)->Arg(2)->Arg(3);

static void BM_SeminormalRep(benchmark::State& state) {
  Partition mu({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(build_rep(mu));
}
BENCHMARK(BM_SeminormalRep);

static void BM_Fusion(benchmark::State& state) {
  StandardTableau t = row_tableau(Partition({2, 1}));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fusion(t, t, n, n));
}
BENCHMARK(BM_Fusion)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QuantumImmanant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantum_immanant(Partition({2, 1}), n, n));
}
BENCHMARK(BM_QuantumImmanant)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ShiftedSchur(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shifted_schur(Partition({3, 2, 1}), n));
}
BENCHMARK(BM_ShiftedSchur)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
