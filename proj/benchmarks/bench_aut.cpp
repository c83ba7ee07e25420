#include <benchmark/benchmark.h>

#include "tube/aut/aut.hpp"

using namespace tube;

namespace {

void BM_AutFromSamplesPluecker(benchmark::State& state) {
  auto x = zoo::make_pluecker_rank2(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aut::aut_from_samples(x));
}
BENCHMARK(BM_AutFromSamplesPluecker)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AutFromQuadricsSegre(benchmark::State& state) {
  auto x = zoo::make_segre(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aut::aut_from_quadrics(x));
}
BENCHMARK(BM_AutFromQuadricsSegre)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ProlongSlice(benchmark::State& state) {
  auto g = aut::aut_from_samples(zoo::make_veronese2(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aut::prolong(g));
}
BENCHMARK(BM_ProlongSlice)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ProlongAnnihilator(benchmark::State& state) {
  auto g = aut::aut_from_samples(zoo::make_veronese2(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(aut::prolong_by_annihilator(g));
}
BENCHMARK(BM_ProlongAnnihilator)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Severi(benchmark::State& state) {
  auto x = zoo::make_severi_e6();
  for (auto _ : state) benchmark::DoNotOptimize(aut::prolong_k(x, 1));
}
BENCHMARK(BM_Severi)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
