#ifndef DISTBENCH_KNN_HPP
#define DISTBENCH_KNN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "distbench/dataset.hpp"
#include "distbench/metrics.hpp"

namespace distbench {

struct Neighbor {
    /// Position within the model's training rows.
    std::size_t index;
    double distance;
};

/// Ascending by distance; equal distances ordered by ascending index.
using NeighborList = std::vector<Neighbor>;

/**
 * @brief Brute-force k-nearest-neighbour classifier.
 *
 * A lazy learner: the training rows are copied verbatim and every query is
 * compared against all of them, O(rows * features) per query.
 */
class KnnModel {
public:
    /// Throws Error(InvalidArgument) unless 1 <= k <= training.size(), and
    /// Error(DomainViolation) if a training row is outside the metric domain.
    KnnModel(const DatasetView& training, const MetricDescriptor& metric, std::size_t k);
    KnnModel(const DatasetView& training, const MetricDescriptor& metric, std::size_t k, const GuardPolicy& guard);

    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t n_features() const noexcept { return n_features_; }
    const MetricDescriptor& metric() const noexcept { return *metric_; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {rows_.data() + i * n_features_, n_features_};
    }
    ClassId label(std::size_t i) const noexcept { return labels_[i]; }

    /// The k nearest training rows. Throws Error(DimensionMismatch) or
    /// Error(DomainViolation) for an invalid query.
    NeighborList neighbors(std::span<const double> query) const;

    /// Majority class among the k neighbours. A vote tie goes to the tied
    /// class whose member appears first in the neighbour list.
    ClassId classify(std::span<const double> query) const;

    std::vector<ClassId> classify(const DatasetView& queries) const;

private:
    void validate_query(std::span<const double> query) const;

    const MetricDescriptor* metric_;
    GuardPolicy guard_;
    std::size_t k_;
    std::size_t n_features_;
    std::vector<double> rows_;
    std::vector<ClassId> labels_;
    ClassId max_label_ = 0;
};

}  // namespace distbench

#endif
