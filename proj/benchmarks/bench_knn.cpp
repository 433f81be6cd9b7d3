#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "distbench/dataset.hpp"
#include "distbench/knn.hpp"
#include "distbench/metrics.hpp"
#include "distbench/noise.hpp"

using namespace distbench;

namespace {

Dataset synthetic(std::size_t rows, std::size_t features) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> values(rows * features);
    for (auto& v : values) {
        v = dist(gen);
    }
    std::vector<ClassId> labels(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        labels[i] = static_cast<ClassId>(i % 3);
    }
    return {"synthetic", features, std::move(values), std::move(labels), {"a", "b", "c"}};
}

void BM_ClassifySplit(benchmark::State& state) {
    const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const auto [train, test] = split(ds, {0.34, 1, 5}, 0);
    const auto& metric = describe(state.range(2) == 0 ? MetricId::ED : MetricId::HasD);
    const KnnModel model(train, metric, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.classify(test));
    }
    state.SetLabel(std::string(metric.abbrev));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * test.size()));
}

void BM_Neighbors(benchmark::State& state) {
    const auto ds = synthetic(2000, 16);
    const auto [train, test] = split(ds, {0.34, 1, 5}, 0);
    const KnnModel model(train, describe(MetricId::ED), static_cast<std::size_t>(state.range(0)));
    std::size_t q = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.neighbors(test.row(q)));
        q = (q + 1) % test.size();
    }
}

void BM_InjectNoise(benchmark::State& state) {
    const auto ds = synthetic(2000, 16);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(inject(ds, {0.5, seed++}));
    }
}

}  // namespace

BENCHMARK(BM_ClassifySplit)->Args({500, 8, 0})->Args({500, 8, 1})->Args({2000, 16, 0})->Args({2000, 16, 1})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Neighbors)->Arg(1)->Arg(3)->Arg(50);
BENCHMARK(BM_InjectNoise);

BENCHMARK_MAIN();
