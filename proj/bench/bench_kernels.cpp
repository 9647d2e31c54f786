// Serial reference (threads = 1) against the OpenMP path for the two
// data-parallel kernels: the (k, alpha) fan-out in enumerate_all and the
// prefix-split partition sweep in brute_force_oracle.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "fatcolor/families.hpp"
#include "fatcolor/solver.hpp"

namespace {

using namespace fatcolor;

const Graph& turan_12_4()
{
    static const Graph g = generate(FamilySpec::turan(12, 4)).graph;
    return g;
}

const Graph& petal_5()
{
    static const Graph g = generate(FamilySpec::petal(5)).graph;
    return g;
}

void BM_EnumerateAll(benchmark::State& state)
{
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_all(turan_12_4(), {}, threads));
}

void BM_Oracle(benchmark::State& state)
{
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_oracle(petal_5(), threads));
}

void thread_counts(benchmark::internal::Benchmark* b)
{
    b->Arg(1);
    if (omp_get_max_threads() > 1)
        b->Arg(omp_get_max_threads());
    b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(BM_EnumerateAll)->Apply(thread_counts);
BENCHMARK(BM_Oracle)->Apply(thread_counts);

BENCHMARK_MAIN();
