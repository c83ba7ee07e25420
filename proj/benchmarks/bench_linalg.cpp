#include <benchmark/benchmark.h>

#include "tube/linalg/echelon.hpp"
#include "tube/linalg/field.hpp"
#include "tube/random.hpp"

using namespace tube;

namespace {

linalg::QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  linalg::QMatrix m(n, n + 1);
  for (auto& x : m.data()) x = rng.uniform(-9, 9);
  return m;
}

void BM_RationalRref(benchmark::State& state) {
  auto m = random_matrix(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rref(linalg::RationalField{}, m));
}
BENCHMARK(BM_RationalRref)->Arg(8)->Arg(16)->Arg(32);

void BM_PrimeRref(benchmark::State& state) {
  linalg::PrimeField f;
  auto m = linalg::convert(f, random_matrix(state.range(0), 1));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::rref(f, m));
}
BENCHMARK(BM_PrimeRref)->Arg(8)->Arg(32)->Arg(128);

}  // namespace
