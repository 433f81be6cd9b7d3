#ifndef DISTBENCH_EXPERIMENT_HPP
#define DISTBENCH_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distbench/config.hpp"
#include "distbench/dataset.hpp"
#include "distbench/eval.hpp"
#include "distbench/stats.hpp"

namespace distbench {

/// One (dataset, metric, noise level, repetition) cell.
struct RunRecord {
    std::string dataset;
    std::string metric;
    double noise_level = 0.0;
    std::size_t repetition = 0;
    /// Empty when the metric cannot run on the dataset's domain.
    std::optional<ScoreTriple> scores;

    bool skipped() const noexcept { return !scores.has_value(); }
};

// Seed derivation. Every metric in a cell sees the same split and the same
// noise; the metric never feeds into a seed.

/// Seed for the train/test partitions of a dataset (shared by all levels).
std::uint64_t split_seed(std::uint64_t master_seed, std::string_view dataset);

/// Seed for the attribute noise of one (dataset, level, repetition).
std::uint64_t noise_seed(std::uint64_t master_seed, std::string_view dataset, double level, std::size_t repetition);

struct RunOptions {
    std::size_t workers = 1;
    /// Receives one line per finished (dataset, level) group; may be empty.
    std::function<void(std::string_view)> progress;
};

/// Loads every configured dataset with the configured schema.
std::vector<Dataset> load_datasets(const ExperimentConfig& cfg);

/**
 * @brief Runs every (dataset, level, metric, repetition) cell.
 *
 * For each repetition the full dataset receives noise at the given level and
 * is then split; level 0 leaves the data untouched. Records are ordered by
 * dataset, level, metric and repetition regardless of the worker count.
 */
std::vector<RunRecord> run_cells(const std::vector<Dataset>& datasets, const std::vector<std::string>& metrics,
                                 const std::vector<double>& levels, const ExperimentConfig& cfg,
                                 const RunOptions& options = {});

/// All configured metrics on the clean data.
std::vector<RunRecord> run_clean_phase(const std::vector<Dataset>& datasets, const ExperimentConfig& cfg,
                                       const RunOptions& options = {});

/// `metrics` at level 0 and at every configured noise level.
std::vector<RunRecord> run_noise_phase(const std::vector<Dataset>& datasets, const ExperimentConfig& cfg,
                                       const std::vector<std::string>& metrics, const RunOptions& options = {});

enum class ScoreKind { Accuracy, Precision, Recall };

std::string_view to_string(ScoreKind kind) noexcept;
double pick(const ScoreTriple& s, ScoreKind kind) noexcept;

/// Overall row of the clean-phase summary.
struct MetricSummary {
    std::string metric;
    /// Means over datasets of the per-dataset means over repetitions.
    ScoreTriple mean;
    /// Datasets on which the metric ran (skipped datasets are excluded).
    std::size_t datasets = 0;
};

/// Per-dataset means over repetitions at `level`, keyed by metric then dataset.
/// Skipped cells are left out.
std::map<std::string, std::map<std::string, ScoreTriple>> dataset_means(const std::vector<RunRecord>& records,
                                                                        double level);

/// Metrics at `level` sorted by descending mean accuracy; ties keep the order
/// of first appearance in `records`.
std::vector<MetricSummary> summarize(const std::vector<RunRecord>& records, double level = 0.0);

/// The first `n` metrics of summarize(records, 0).
std::vector<std::string> top_metrics(const std::vector<RunRecord>& records, std::size_t n);

/// Noise levels present in `records`, ascending.
std::vector<double> levels_of(const std::vector<RunRecord>& records);

/// One rank table per level for the given score.
std::vector<RankTable> rank_tables(const std::vector<RunRecord>& records, ScoreKind kind);

/// Mean and spread of one metric's score at one level.
struct LevelStat {
    std::string metric;
    double level = 0.0;
    /// Mean over datasets of the per-dataset means.
    ScoreTriple mean;
    /// Mean over datasets of the sample standard deviation across repetitions.
    ScoreTriple stddev;
};

std::vector<LevelStat> level_stats(const std::vector<RunRecord>& records);

enum class TestKind { RankSum, SignedRank };

struct Comparison {
    std::string metric;
    ScoreTriple p_value;
    /// Datasets on which both metrics ran.
    std::size_t datasets = 0;
};

inline constexpr double kSignificance = 0.05;

/**
 * @brief Wilcoxon p-values of `reference` against each of `others`.
 *
 * Samples are per-dataset means at `level`, restricted to datasets on which
 * both metrics ran. Throws Error(UnknownMetric) if a metric is unregistered or
 * absent from the records.
 */
std::vector<Comparison> compare_to_reference(const std::vector<RunRecord>& records, std::string_view reference,
                                             const std::vector<std::string>& others,
                                             TestKind test = TestKind::RankSum, double level = 0.0,
                                             PValueMethod method = PValueMethod::Auto);

}  // namespace distbench

#endif
