#include <benchmark/benchmark.h>

#include "polyspace/chambers.hpp"
#include "polyspace/morse.hpp"
#include "polyspace/presentations.hpp"
#include "polyspace/walker.hpp"

using namespace polyspace;

static void BM_ChamberSignature(benchmark::State& state) {
  const LengthVector ell = LengthVector::of({1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 234});
  for (auto _ : state) benchmark::DoNotOptimize(chamber_signature(ell));
}
BENCHMARK(BM_ChamberSignature);

static void BM_EnumerateChambers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(n, 1));
}
BENCHMARK(BM_EnumerateChambers)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_PresentationRanks(benchmark::State& state) {
  const ChamberSignature sig = chamber_signature(LengthVector::of({1, 1, 1, 2, 2, 2, 2}));
  for (auto _ : state) {
    QuotientRing ring(present_h1(sig).presentation);
    benchmark::DoNotOptimize(ring.ranks(4));
  }
}
BENCHMARK(BM_PresentationRanks)->Unit(benchmark::kMicrosecond);

static void BM_MorseReport(benchmark::State& state) {
  const LengthVector ell = LengthVector::of({1, 3, 4, 6, 7, 9, 10, 13});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_subset_bijection(ell));
    benchmark::DoNotOptimize(index_census(ell));
  }
}
BENCHMARK(BM_MorseReport)->Unit(benchmark::kMicrosecond);

static void BM_WalkerVerify(benchmark::State& state) {
  const ChamberCatalog catalog = enumerate_chambers(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_walker(catalog));
}
BENCHMARK(BM_WalkerVerify)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
