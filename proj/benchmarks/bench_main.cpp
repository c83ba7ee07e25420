#include <benchmark/benchmark.h>

// benchmark_main from the system package is an LTO archive built by another compiler version
BENCHMARK_MAIN();
