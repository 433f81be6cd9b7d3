#ifndef DISTBENCH_TESTS_SUPPORT_HPP
#define DISTBENCH_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "distbench/dataset.hpp"

namespace support {

inline std::vector<double> random_vector(std::mt19937_64& gen, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = dist(gen);
    }
    return v;
}

/// Uniform features in [lo, hi), labels uniform over `classes`; every class
/// appears at least once.
inline distbench::Dataset random_dataset(std::string name, std::size_t rows, std::size_t features,
                                         std::size_t classes, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
    std::mt19937_64 gen(seed);
    auto values = random_vector(gen, rows * features, lo, hi);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(classes) - 1);
    std::vector<distbench::ClassId> labels(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        labels[i] = i < classes ? static_cast<distbench::ClassId>(i) : pick(gen);
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < classes; ++c) {
        names.push_back(std::to_string(c));
    }
    return {std::move(name), features, std::move(values), std::move(labels), std::move(names)};
}

/**
 * Linearly separable two-class stand-in for the banknote authentication data:
 * 1372 rows, 4 features in roughly the original ranges, with no point closer
 * than `margin` to the separating hyperplane.
 */
inline distbench::Dataset separable_surrogate(std::uint64_t seed, double margin = 1.0) {
    constexpr std::size_t kRows = 1372;
    constexpr std::size_t kFeatures = 4;
    const double lo[kFeatures] = {-7.0, -14.0, -5.0, -8.0};
    const double hi[kFeatures] = {7.0, 13.0, 18.0, 2.5};
    const double w[kFeatures] = {-0.9, -0.35, -0.3, 0.05};
    double norm = 0.0;
    for (const double c : w) {
        norm += c * c;
    }
    norm = std::sqrt(norm);

    std::mt19937_64 gen(seed);
    std::vector<double> values;
    std::vector<distbench::ClassId> labels;
    while (labels.size() < kRows) {
        double x[kFeatures];
        double s = 1.0;
        for (std::size_t j = 0; j < kFeatures; ++j) {
            x[j] = std::uniform_real_distribution<double>(lo[j], hi[j])(gen);
            s += w[j] * x[j];
        }
        if (std::abs(s) / norm < margin) {
            continue;
        }
        values.insert(values.end(), x, x + kFeatures);
        labels.push_back(s > 0.0 ? 1 : 0);
    }
    return {"banknote_surrogate", kFeatures, std::move(values), std::move(labels), {"0", "1"}};
}

}  // namespace support

#endif
