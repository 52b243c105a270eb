// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "lvt/algebraic/lemmas.hpp"
#include "lvt/rmap/theorem.hpp"

using namespace lvt;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_Enumerate(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_algebraics(BoundSpec{2, 8}, mode(s)));
}

void BM_Lemma2Sweep(benchmark::State& s) {
  auto nums = enumerate_algebraics(BoundSpec{2, 4});
  for (auto _ : s) benchmark::DoNotOptimize(lemma2_sweep(nums, mode(s)));
}

void BM_PrimitivityScan(benchmark::State& s) {
  RationalMap F = compile_map("(theta*x+1)/(x+2)", NumberField::radical(3, 2));
  for (auto _ : s) benchmark::DoNotOptimize(primitivity_scan(F, 30, mode(s)));
}

void BM_Audit(benchmark::State& s) {
  auto xi = std::make_shared<SeriesNumber>(10, ExponentSchedule::factorial());
  RationalMap F = compile_map("theta*x", NumberField::radical(2, 2));
  auto recs = approximant_sequence(*xi, F, {2, 3, 4});
  Refiner Fx = map_of(xi, F);
  for (auto _ : s) benchmark::DoNotOptimize(lower_degree_audit(Fx, 1, BoundSpec{1, 60}, recs, 2, 2, mode(s)));
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lemma2Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrimitivityScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Audit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
