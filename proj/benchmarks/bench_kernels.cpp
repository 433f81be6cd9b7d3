#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "distbench/metrics.hpp"

using namespace distbench;

namespace {

std::vector<double> positive_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(0.01, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = dist(gen);
    }
    return v;
}

void BM_Kernel(benchmark::State& state) {
    const auto& metric = registry()[static_cast<std::size_t>(state.range(0))];
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto x = positive_vector(n, 1);
    const auto y = positive_vector(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(metric.kernel(x, y, metric.guard));
    }
    state.SetLabel(std::string(metric.abbrev));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void KernelArgs(benchmark::internal::Benchmark* b) {
    for (std::int64_t id = 0; id < static_cast<std::int64_t>(kMetricCount); ++id) {
        for (const std::int64_t n : {8, 64}) {
            b->Args({id, n});
        }
    }
}

void BM_Evaluate(benchmark::State& state) {
    const auto x = positive_vector(static_cast<std::size_t>(state.range(0)), 3);
    const auto y = positive_vector(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(MetricId::HasD, x, y));
    }
}

}  // namespace

BENCHMARK(BM_Kernel)->Apply(KernelArgs);
BENCHMARK(BM_Evaluate)->Arg(8)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
