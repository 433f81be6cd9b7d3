#ifndef DISTBENCH_EVAL_HPP
#define DISTBENCH_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "distbench/dataset.hpp"

namespace distbench {

/// n x n counts; rows are actual classes, columns predicted classes.
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::size_t n_classes);

    std::size_t n_classes() const noexcept { return n_; }
    std::uint64_t count(std::size_t actual, std::size_t predicted) const noexcept {
        return counts_[actual * n_ + predicted];
    }
    void add(std::size_t actual, std::size_t predicted) noexcept { ++counts_[actual * n_ + predicted]; }

    std::uint64_t total() const noexcept;
    std::uint64_t row_sum(std::size_t actual) const noexcept;
    std::uint64_t column_sum(std::size_t predicted) const noexcept;

    std::uint64_t tp(std::size_t c) const noexcept { return count(c, c); }
    std::uint64_t fp(std::size_t c) const noexcept { return column_sum(c) - tp(c); }
    std::uint64_t fn(std::size_t c) const noexcept { return row_sum(c) - tp(c); }
    std::uint64_t tn(std::size_t c) const noexcept { return total() - tp(c) - fp(c) - fn(c); }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::uint64_t> counts_;
};

/// Throws Error(LengthMismatch) for unequal or empty inputs and
/// Error(ClassOutOfRange) for ids outside [0, n_classes).
ConfusionMatrix confusion(std::span<const ClassId> actual, std::span<const ClassId> predicted, std::size_t n_classes);

/// trace / total; 0 for an empty matrix.
double accuracy(const ConfusionMatrix& cm) noexcept;

// Unweighted means over all classes. A class whose denominator is zero
// contributes 0 to the average.
double macro_precision(const ConfusionMatrix& cm) noexcept;
double macro_recall(const ConfusionMatrix& cm) noexcept;

struct ScoreTriple {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
};

ScoreTriple score(const ConfusionMatrix& cm) noexcept;

struct RankEntry {
    std::string metric;
    double mean = 0.0;
    /// Competition ranking: tied means share a rank and the next is skipped.
    std::size_t rank = 0;
};

struct RankTable {
    double level = 0.0;
    std::vector<RankEntry> entries;
};

/// Orders metrics by the mean of their per-dataset scores, descending.
/// Means within `tie_tolerance` of the previous entry share its rank.
/// Throws Error(InvalidArgument) if a metric has no scores.
RankTable rank_distances(const std::map<std::string, std::vector<double>>& scores, double level,
                         double tie_tolerance = 1e-9);

}  // namespace distbench

#endif
