#include "distbench/noise.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "distbench/error.hpp"
#include "distbench/rng.hpp"

namespace distbench {

namespace {

void check_level(double level) {
    if (!(level >= 0.0 && level < 1.0)) {
        throw Error(Errc::InvalidArgument, fmt::format("noise level {} not in [0, 1)", level));
    }
}

// Partial Fisher-Yates over [0, n); draws from `rng` so inject() can keep
// using the same stream for the attribute values.
std::vector<std::size_t> select_rows(std::size_t n, std::size_t count, Rng& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(order[i], order[i + rng.below(n - i)]);
    }
    order.resize(count);
    return order;
}

}  // namespace

std::size_t noisy_count(std::size_t n, double level) {
    check_level(level);
    return static_cast<std::size_t>(std::floor(level * static_cast<double>(n) + 0.5));
}

std::vector<std::size_t> noisy_rows(std::size_t n, const NoiseSpec& spec) {
    Rng rng(spec.seed);
    return select_rows(n, noisy_count(n, spec.level), rng);
}

Dataset inject(const Dataset& ds, const NoiseSpec& spec) {
    const std::size_t count = noisy_count(ds.size(), spec.level);
    if (count == 0) {
        return ds;
    }
    Rng rng(spec.seed);
    const auto rows = select_rows(ds.size(), count, rng);

    std::vector<double> values(ds.values().begin(), ds.values().end());
    const std::size_t n = ds.n_features();
    const auto lo = ds.attr_min();
    const auto hi = ds.attr_max();
    for (const std::size_t r : rows) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = lo[j] + rng.uniform01() * (hi[j] - lo[j]);
            values[r * n + j] = std::min(v, hi[j]);
        }
    }
    return ds.with_values(std::move(values));
}

}  // namespace distbench
