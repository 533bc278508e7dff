// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "eoc/counting.hpp"
#include "eoc/enumerate.hpp"
#include "eoc/parallel.hpp"

using namespace eoc;

namespace {

void BM_CycleCountSerial(benchmark::State& state) {
  const auto set = Multiset::uniform(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(count(FamilyId::cycles(Family::EC, set)));
}

void BM_CycleCountParallel(benchmark::State& state) {
  const auto set = Multiset::uniform(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(parallel::count_cycles(set, Family::EC));
}

void BM_DumontCountSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count(FamilyId::sized(Family::Dumont, n)));
}

void BM_DumontCountParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::count_permutations(Family::Dumont, n));
}

void BM_GenocchiSumSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genocchi_dumont(n));
}

void BM_GenocchiSumParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::genocchi_dumont(n));
}

DescentSpec evens(int n) {
  std::set<Value> s;
  for (int v = 2; v < n; v += 2) s.insert(v);
  return DescentSpec(n, s);
}

void BM_FEqSerial(benchmark::State& state) {
  const auto spec = evens(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f_eq_ie(spec));
}

void BM_FEqParallel(benchmark::State& state) {
  const auto spec = evens(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parallel::f_eq_ie(spec));
}

}  // namespace

BENCHMARK(BM_CycleCountSerial)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleCountParallel)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DumontCountSerial)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DumontCountParallel)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenocchiSumSerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenocchiSumParallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FEqSerial)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FEqParallel)->Arg(13)->Arg(17)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
