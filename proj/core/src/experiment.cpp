#include "distbench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "distbench/error.hpp"
#include "distbench/knn.hpp"
#include "distbench/metrics.hpp"
#include "distbench/noise.hpp"
#include "distbench/rng.hpp"

namespace distbench {

namespace {

constexpr std::uint64_t kSplitTag = 0x73706c6974;  // "split"
constexpr std::uint64_t kNoiseTag = 0x6e6f697365;  // "noise"

std::uint64_t level_key(double level) noexcept {
    return static_cast<std::uint64_t>(std::llround(level * 1e9));
}

// Runs f(0) .. f(n-1) on up to `workers` threads; the first exception is
// rethrown after every thread has stopped.
template <typename F>
void parallel_for(std::size_t n, std::size_t workers, F&& f) {
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        f(i);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        next = n;
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::optional<ScoreTriple> run_one(const Dataset& data, const SplitIndices& split, const MetricDescriptor& metric,
                                   std::size_t k) {
    if (metric.flags.requires_nonneg_inputs && !data.nonnegative()) {
        return std::nullopt;
    }
    const DatasetView train(data, split.train);
    const DatasetView test(data, split.test);
    const KnnModel model(train, metric, k);
    const auto predicted = model.classify(test);
    std::vector<ClassId> actual(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        actual[i] = test.label(i);
    }
    return score(confusion(actual, predicted, data.n_classes()));
}

struct Moments {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t n = 0;

    void add(double v) noexcept {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    double mean() const noexcept { return n == 0 ? 0.0 : sum / static_cast<double>(n); }
    double sample_stddev() const noexcept {
        if (n < 2) {
            return 0.0;
        }
        const double m = mean();
        const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return std::sqrt(std::max(0.0, var));
    }
};

struct TripleMoments {
    Moments accuracy;
    Moments precision;
    Moments recall;

    void add(const ScoreTriple& s) noexcept {
        accuracy.add(s.accuracy);
        precision.add(s.precision);
        recall.add(s.recall);
    }
    ScoreTriple mean() const noexcept { return {accuracy.mean(), precision.mean(), recall.mean()}; }
    ScoreTriple sample_stddev() const noexcept {
        return {accuracy.sample_stddev(), precision.sample_stddev(), recall.sample_stddev()};
    }
};

// Metrics in order of first appearance at `level`.
std::vector<std::string> metric_order(const std::vector<RunRecord>& records, double level) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    for (const auto& r : records) {
        if (r.noise_level == level && seen.insert(r.metric).second) {
            order.push_back(r.metric);
        }
    }
    return order;
}

ScoreTriple average(const std::vector<ScoreTriple>& values) {
    TripleMoments m;
    for (const auto& v : values) {
        m.add(v);
    }
    return m.mean();
}

}  // namespace

std::uint64_t split_seed(std::uint64_t master_seed, std::string_view dataset) {
    return mix_seed(mix_seed(master_seed, hash_name(dataset)), kSplitTag);
}

std::uint64_t noise_seed(std::uint64_t master_seed, std::string_view dataset, double level, std::size_t repetition) {
    const auto base = mix_seed(mix_seed(master_seed, hash_name(dataset)), kNoiseTag);
    return mix_seed(mix_seed(base, level_key(level)), repetition);
}

std::vector<Dataset> load_datasets(const ExperimentConfig& cfg) {
    std::vector<Dataset> out;
    out.reserve(cfg.datasets.size());
    for (const auto& path : cfg.datasets) {
        out.push_back(load_csv(path, cfg.schema));
    }
    return out;
}

std::vector<RunRecord> run_cells(const std::vector<Dataset>& datasets, const std::vector<std::string>& metrics,
                                 const std::vector<double>& levels, const ExperimentConfig& cfg,
                                 const RunOptions& options) {
    std::vector<const MetricDescriptor*> descriptors;
    for (const auto& m : metrics) {
        descriptors.push_back(&describe(m));
    }
    const std::size_t reps = cfg.repetitions;

    std::vector<RunRecord> records;
    records.reserve(datasets.size() * levels.size() * metrics.size() * reps);
    for (const auto& ds : datasets) {
        const SplitPlan plan{cfg.test_fraction, reps, split_seed(cfg.master_seed, ds.name())};
        for (const double level : levels) {
            const auto started = std::chrono::steady_clock::now();

            std::vector<Dataset> noisy;
            std::vector<SplitIndices> splits;
            for (std::size_t r = 0; r < reps; ++r) {
                if (level > 0.0) {
                    noisy.push_back(inject(ds, {level, noise_seed(cfg.master_seed, ds.name(), level, r)}));
                }
                splits.push_back(split_indices(level > 0.0 ? noisy.back() : ds, plan, r));
            }

            std::vector<std::optional<ScoreTriple>> results(descriptors.size() * reps);
            parallel_for(results.size(), options.workers, [&](std::size_t job) {
                const std::size_t m = job / reps;
                const std::size_t r = job % reps;
                const Dataset& data = level > 0.0 ? noisy[r] : ds;
                results[job] = run_one(data, splits[r], *descriptors[m], cfg.k);
            });

            for (std::size_t job = 0; job < results.size(); ++job) {
                records.push_back({ds.name(), metrics[job / reps], level, job % reps, results[job]});
            }
            if (options.progress) {
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
                options.progress(fmt::format("{} level {}: {} cells in {:.2f} s", ds.name(), level, results.size(),
                                             elapsed.count()));
            }
        }
    }
    return records;
}

std::vector<RunRecord> run_clean_phase(const std::vector<Dataset>& datasets, const ExperimentConfig& cfg,
                                       const RunOptions& options) {
    return run_cells(datasets, effective_metrics(cfg), {0.0}, cfg, options);
}

std::vector<RunRecord> run_noise_phase(const std::vector<Dataset>& datasets, const ExperimentConfig& cfg,
                                       const std::vector<std::string>& metrics, const RunOptions& options) {
    std::vector<double> levels{0.0};
    for (const double level : effective_noise_levels(cfg)) {
        levels.push_back(level);
    }
    return run_cells(datasets, metrics, levels, cfg, options);
}

std::string_view to_string(ScoreKind kind) noexcept {
    switch (kind) {
        case ScoreKind::Accuracy:
            return "accuracy";
        case ScoreKind::Precision:
            return "precision";
        case ScoreKind::Recall:
            return "recall";
    }
    return "?";
}

double pick(const ScoreTriple& s, ScoreKind kind) noexcept {
    switch (kind) {
        case ScoreKind::Accuracy:
            return s.accuracy;
        case ScoreKind::Precision:
            return s.precision;
        case ScoreKind::Recall:
            return s.recall;
    }
    return 0.0;
}

std::map<std::string, std::map<std::string, ScoreTriple>> dataset_means(const std::vector<RunRecord>& records,
                                                                        double level) {
    std::map<std::string, std::map<std::string, TripleMoments>> acc;
    for (const auto& r : records) {
        if (r.noise_level == level && r.scores) {
            acc[r.metric][r.dataset].add(*r.scores);
        }
    }
    std::map<std::string, std::map<std::string, ScoreTriple>> out;
    for (const auto& [metric, per_dataset] : acc) {
        for (const auto& [dataset, moments] : per_dataset) {
            out[metric][dataset] = moments.mean();
        }
    }
    return out;
}

std::vector<MetricSummary> summarize(const std::vector<RunRecord>& records, double level) {
    const auto means = dataset_means(records, level);
    std::vector<MetricSummary> out;
    for (const auto& metric : metric_order(records, level)) {
        const auto it = means.find(metric);
        if (it == means.end()) {
            continue;  // skipped on every dataset
        }
        std::vector<ScoreTriple> values;
        for (const auto& [dataset, triple] : it->second) {
            values.push_back(triple);
        }
        out.push_back({metric, average(values), values.size()});
    }
    std::stable_sort(out.begin(), out.end(), [](const MetricSummary& a, const MetricSummary& b) {
        return a.mean.accuracy > b.mean.accuracy;
    });
    return out;
}

std::vector<std::string> top_metrics(const std::vector<RunRecord>& records, std::size_t n) {
    std::vector<std::string> out;
    for (const auto& s : summarize(records, 0.0)) {
        if (out.size() == n) {
            break;
        }
        out.push_back(s.metric);
    }
    return out;
}

std::vector<double> levels_of(const std::vector<RunRecord>& records) {
    std::set<double> levels;
    for (const auto& r : records) {
        levels.insert(r.noise_level);
    }
    return {levels.begin(), levels.end()};
}

std::vector<RankTable> rank_tables(const std::vector<RunRecord>& records, ScoreKind kind) {
    std::vector<RankTable> tables;
    for (const double level : levels_of(records)) {
        std::map<std::string, std::vector<double>> scores;
        for (const auto& [metric, per_dataset] : dataset_means(records, level)) {
            for (const auto& [dataset, triple] : per_dataset) {
                scores[metric].push_back(pick(triple, kind));
            }
        }
        if (!scores.empty()) {
            tables.push_back(rank_distances(scores, level));
        }
    }
    return tables;
}

std::vector<LevelStat> level_stats(const std::vector<RunRecord>& records) {
    std::vector<LevelStat> out;
    for (const double level : levels_of(records)) {
        std::map<std::string, std::map<std::string, TripleMoments>> acc;
        for (const auto& r : records) {
            if (r.noise_level == level && r.scores) {
                acc[r.metric][r.dataset].add(*r.scores);
            }
        }
        for (const auto& metric : metric_order(records, level)) {
            const auto it = acc.find(metric);
            if (it == acc.end()) {
                continue;
            }
            std::vector<ScoreTriple> means;
            std::vector<ScoreTriple> spreads;
            for (const auto& [dataset, moments] : it->second) {
                means.push_back(moments.mean());
                spreads.push_back(moments.sample_stddev());
            }
            out.push_back({metric, level, average(means), average(spreads)});
        }
    }
    return out;
}

std::vector<Comparison> compare_to_reference(const std::vector<RunRecord>& records, std::string_view reference,
                                             const std::vector<std::string>& others, TestKind test, double level,
                                             PValueMethod method) {
    describe(reference);
    for (const auto& other : others) {
        describe(other);
    }
    const auto means = dataset_means(records, level);
    const auto lookup = [&](std::string_view metric) -> const std::map<std::string, ScoreTriple>& {
        const auto it = means.find(std::string(metric));
        if (it == means.end()) {
            throw Error(Errc::UnknownMetric, fmt::format("no scores for {} at level {}", metric, level));
        }
        return it->second;
    };
    const auto& ref = lookup(reference);

    std::vector<Comparison> out;
    for (const auto& other : others) {
        const auto& cmp = lookup(other);
        Comparison row{other, {}, 0};
        std::vector<double> a[3];
        std::vector<double> b[3];
        for (const auto& [dataset, ref_scores] : ref) {
            const auto it = cmp.find(dataset);
            if (it == cmp.end()) {
                continue;
            }
            ++row.datasets;
            for (const auto kind : {ScoreKind::Accuracy, ScoreKind::Precision, ScoreKind::Recall}) {
                const auto idx = static_cast<std::size_t>(kind);
                a[idx].push_back(pick(ref_scores, kind));
                b[idx].push_back(pick(it->second, kind));
            }
        }
        if (row.datasets == 0) {
            throw Error(Errc::InvalidArgument, fmt::format("{} and {} share no datasets", reference, other));
        }
        const auto p = [&](std::size_t idx) {
            return test == TestKind::RankSum ? wilcoxon_rank_sum(a[idx], b[idx], method)
                                             : wilcoxon_signed_rank(a[idx], b[idx], method);
        };
        row.p_value = {p(0), p(1), p(2)};
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace distbench
