#include <benchmark/benchmark.h>

// The distribution's benchmark_main archive carries LTO bytecode from another
// compiler release, so the entry point is provided here.
BENCHMARK_MAIN();
