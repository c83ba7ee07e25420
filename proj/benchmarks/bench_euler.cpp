#include <benchmark/benchmark.h>

#include "tube/euler/model.hpp"
#include "tube/euler/structure.hpp"
#include "tube/roots/bb.hpp"

using namespace tube;

namespace {

void BM_BuildModelMinors(benchmark::State& state) {
  auto s = euler::minors(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(euler::build_model(s));
}
BENCHMARK(BM_BuildModelMinors)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LambdaMap(benchmark::State& state) {
  auto m = euler::build_model(euler::pfaffian(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(euler::lambda_map(m));
}
BENCHMARK(BM_LambdaMap)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Classification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(roots::equalized_euler_diagrams(state.range(0)));
}
BENCHMARK(BM_Classification)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
