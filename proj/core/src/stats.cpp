#include "distbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "distbench/error.hpp"

namespace distbench {

namespace {

constexpr double kTieSlack = 1e-9;

// sum over tie groups of t^3 - t
double tie_term(std::span<const double> values) {
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        const double t = static_cast<double>(j - i);
        sum += t * t * t - t;
        i = j;
    }
    return sum;
}

double normal_two_sided(double deviation, double variance) {
    if (variance <= 0.0) {
        return 1.0;
    }
    const double z = std::max(0.0, std::abs(deviation) - 0.5) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

std::vector<std::size_t> doubled(const std::vector<double>& ranks) {
    std::vector<std::size_t> out;
    out.reserve(ranks.size());
    for (const double r : ranks) {
        out.push_back(static_cast<std::size_t>(std::lround(2.0 * r)));
    }
    return out;
}

// P(|S - centre| >= |observed - centre|) for a distribution given as counts by sum.
double tail_probability(const std::vector<double>& counts, double observed, double centre) {
    const double threshold = std::abs(observed - centre) - kTieSlack;
    double hit = 0.0;
    double total = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        total += counts[s];
        if (std::abs(static_cast<double>(s) - centre) >= threshold) {
            hit += counts[s];
        }
    }
    return std::min(1.0, hit / total);
}

double rank_sum_exact(const std::vector<std::size_t>& r2, std::size_t n1, double observed2) {
    const std::size_t max_sum = std::accumulate(r2.begin(), r2.end(), std::size_t{0});
    // counts[j][s]: subsets of size j with doubled rank sum s
    std::vector<std::vector<double>> counts(n1 + 1, std::vector<double>(max_sum + 1, 0.0));
    counts[0][0] = 1.0;
    for (const std::size_t r : r2) {
        for (std::size_t j = n1; j >= 1; --j) {
            for (std::size_t s = max_sum; s >= r; --s) {
                counts[j][s] += counts[j - 1][s - r];
            }
        }
    }
    const double centre = static_cast<double>(n1) * static_cast<double>(max_sum) / static_cast<double>(r2.size());
    return tail_probability(counts[n1], observed2, centre);
}

double signed_rank_exact(const std::vector<std::size_t>& r2, double observed2) {
    const std::size_t max_sum = std::accumulate(r2.begin(), r2.end(), std::size_t{0});
    std::vector<double> counts(max_sum + 1, 0.0);
    counts[0] = 1.0;
    for (const std::size_t r : r2) {
        for (std::size_t s = max_sum; s >= r; --s) {
            counts[s] += counts[s - r];
        }
    }
    return tail_probability(counts, observed2, 0.5 * static_cast<double>(max_sum));
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        const double mid = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t t = i; t < j; ++t) {
            ranks[order[t]] = mid;
        }
        i = j;
    }
    return ranks;
}

double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, PValueMethod method) {
    if (a.empty() || b.empty()) {
        throw Error(Errc::InvalidArgument, "rank-sum test needs two non-empty samples");
    }
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = pooled.size();
    if (std::all_of(pooled.begin(), pooled.end(), [&](double v) { return v == pooled.front(); })) {
        return 1.0;
    }

    const auto ranks = midranks(pooled);
    const double w = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n1), 0.0);

    const bool exact = method == PValueMethod::Exact || (method == PValueMethod::Auto && n <= kExactLimit);
    if (exact) {
        return rank_sum_exact(doubled(ranks), n1, 2.0 * w);
    }
    const double dn = static_cast<double>(n);
    const double mean = static_cast<double>(n1) * (dn + 1.0) / 2.0;
    const double variance =
        static_cast<double>(n1) * static_cast<double>(n2) / 12.0 * ((dn + 1.0) - tie_term(pooled) / (dn * (dn - 1.0)));
    return normal_two_sided(w - mean, variance);
}

double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b, PValueMethod method) {
    if (a.size() != b.size()) {
        throw Error(Errc::LengthMismatch, fmt::format("paired samples of length {} and {}", a.size(), b.size()));
    }
    if (a.empty()) {
        throw Error(Errc::InvalidArgument, "signed-rank test needs non-empty samples");
    }
    std::vector<double> magnitude;
    std::vector<bool> positive;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) {
            magnitude.push_back(std::abs(d));
            positive.push_back(d > 0.0);
        }
    }
    if (magnitude.empty()) {
        return 1.0;
    }
    const auto ranks = midranks(magnitude);
    double w_plus = 0.0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (positive[i]) {
            w_plus += ranks[i];
        }
    }
    const std::size_t n = ranks.size();
    const bool exact = method == PValueMethod::Exact || (method == PValueMethod::Auto && n <= kExactLimit);
    if (exact) {
        return signed_rank_exact(doubled(ranks), 2.0 * w_plus);
    }
    const double dn = static_cast<double>(n);
    const double mean = dn * (dn + 1.0) / 4.0;
    const double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term(magnitude) / 48.0;
    return normal_two_sided(w_plus - mean, variance);
}

}  // namespace distbench
