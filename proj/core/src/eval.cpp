#include "distbench/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "distbench/error.hpp"

namespace distbench {

ConfusionMatrix::ConfusionMatrix(std::size_t n_classes) : n_(n_classes), counts_(n_classes * n_classes, 0) {}

std::uint64_t ConfusionMatrix::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t actual) const noexcept {
    std::uint64_t s = 0;
    for (std::size_t p = 0; p < n_; ++p) {
        s += count(actual, p);
    }
    return s;
}

std::uint64_t ConfusionMatrix::column_sum(std::size_t predicted) const noexcept {
    std::uint64_t s = 0;
    for (std::size_t a = 0; a < n_; ++a) {
        s += count(a, predicted);
    }
    return s;
}

ConfusionMatrix confusion(std::span<const ClassId> actual, std::span<const ClassId> predicted, std::size_t n_classes) {
    if (actual.size() != predicted.size() || actual.empty()) {
        throw Error(Errc::LengthMismatch,
                    fmt::format("{} actual vs {} predicted labels", actual.size(), predicted.size()));
    }
    ConfusionMatrix cm(n_classes);
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const ClassId a = actual[i];
        const ClassId p = predicted[i];
        if (a < 0 || p < 0 || static_cast<std::size_t>(a) >= n_classes || static_cast<std::size_t>(p) >= n_classes) {
            throw Error(Errc::ClassOutOfRange, fmt::format("pair ({}, {}) with {} classes", a, p, n_classes));
        }
        cm.add(static_cast<std::size_t>(a), static_cast<std::size_t>(p));
    }
    return cm;
}

double accuracy(const ConfusionMatrix& cm) noexcept {
    const auto total = cm.total();
    if (total == 0) {
        return 0.0;
    }
    std::uint64_t trace = 0;
    for (std::size_t c = 0; c < cm.n_classes(); ++c) {
        trace += cm.tp(c);
    }
    return static_cast<double>(trace) / static_cast<double>(total);
}

namespace {

template <typename Denominator>
double macro_average(const ConfusionMatrix& cm, Denominator denominator) noexcept {
    if (cm.n_classes() == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < cm.n_classes(); ++c) {
        const auto den = denominator(c);
        if (den != 0) {
            sum += static_cast<double>(cm.tp(c)) / static_cast<double>(den);
        }
    }
    return sum / static_cast<double>(cm.n_classes());
}

}  // namespace

double macro_precision(const ConfusionMatrix& cm) noexcept {
    return macro_average(cm, [&](std::size_t c) { return cm.tp(c) + cm.fp(c); });
}

double macro_recall(const ConfusionMatrix& cm) noexcept {
    return macro_average(cm, [&](std::size_t c) { return cm.tp(c) + cm.fn(c); });
}

ScoreTriple score(const ConfusionMatrix& cm) noexcept {
    return {accuracy(cm), macro_precision(cm), macro_recall(cm)};
}

RankTable rank_distances(const std::map<std::string, std::vector<double>>& scores, double level,
                         double tie_tolerance) {
    RankTable table{level, {}};
    for (const auto& [metric, values] : scores) {
        if (values.empty()) {
            throw Error(Errc::InvalidArgument, "no scores for " + metric);
        }
        const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
        table.entries.push_back({metric, mean, 0});
    }
    std::stable_sort(table.entries.begin(), table.entries.end(),
                     [](const RankEntry& a, const RankEntry& b) { return a.mean > b.mean; });
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        auto& e = table.entries[i];
        const bool tied = i > 0 && std::abs(table.entries[i - 1].mean - e.mean) <= tie_tolerance;
        e.rank = tied ? table.entries[i - 1].rank : i + 1;
    }
    return table;
}

}  // namespace distbench
