#include "distbench/knn.hpp"

#include <algorithm>
#include <queue>

#include <fmt/format.h>

#include "distbench/error.hpp"

namespace distbench {

namespace {

bool closer(const Neighbor& a, const Neighbor& b) noexcept {
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
}

}  // namespace

KnnModel::KnnModel(const DatasetView& training, const MetricDescriptor& metric, std::size_t k)
    : KnnModel(training, metric, k, metric.guard) {}

KnnModel::KnnModel(const DatasetView& training, const MetricDescriptor& metric, std::size_t k,
                   const GuardPolicy& guard)
    : metric_(&metric), guard_(guard), k_(k), n_features_(training.n_features()) {
    if (k == 0 || k > training.size()) {
        throw Error(Errc::InvalidArgument, fmt::format("k = {} with {} training rows", k, training.size()));
    }
    rows_.reserve(training.size() * n_features_);
    labels_.reserve(training.size());
    for (std::size_t i = 0; i < training.size(); ++i) {
        const auto r = training.row(i);
        check_domain(metric, r);
        rows_.insert(rows_.end(), r.begin(), r.end());
        labels_.push_back(training.label(i));
        max_label_ = std::max(max_label_, training.label(i));
    }
}

void KnnModel::validate_query(std::span<const double> query) const {
    if (query.size() != n_features_) {
        throw Error(Errc::DimensionMismatch,
                    fmt::format("query has {} features, model has {}", query.size(), n_features_));
    }
    check_domain(*metric_, query);
}

NeighborList KnnModel::neighbors(std::span<const double> query) const {
    validate_query(query);
    const std::size_t m = size();
    const Kernel kernel = metric_->kernel;

    if (2 * k_ >= m) {
        NeighborList all(m);
        for (std::size_t i = 0; i < m; ++i) {
            all[i] = {i, kernel(query, row(i), guard_)};
        }
        std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k_), all.end(), closer);
        all.resize(k_);
        return all;
    }

    // Bounded max-heap: the top is the worst of the k best seen so far.
    std::priority_queue<Neighbor, std::vector<Neighbor>, decltype(&closer)> heap(closer);
    for (std::size_t i = 0; i < m; ++i) {
        const Neighbor cand{i, kernel(query, row(i), guard_)};
        if (heap.size() < k_) {
            heap.push(cand);
        } else if (closer(cand, heap.top())) {
            heap.pop();
            heap.push(cand);
        }
    }
    NeighborList out(heap.size());
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
        *it = heap.top();
        heap.pop();
    }
    return out;
}

ClassId KnnModel::classify(std::span<const double> query) const {
    const NeighborList nn = neighbors(query);
    if (k_ == 1) {
        return label(nn.front().index);
    }
    std::vector<std::size_t> votes(static_cast<std::size_t>(max_label_) + 1, 0);
    std::size_t best = 0;
    for (const auto& n : nn) {
        best = std::max(best, ++votes[static_cast<std::size_t>(label(n.index))]);
    }
    for (const auto& n : nn) {
        if (votes[static_cast<std::size_t>(label(n.index))] == best) {
            return label(n.index);
        }
    }
    return label(nn.front().index);
}

std::vector<ClassId> KnnModel::classify(const DatasetView& queries) const {
    std::vector<ClassId> out;
    out.reserve(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        out.push_back(classify(queries.row(i)));
    }
    return out;
}

}  // namespace distbench
