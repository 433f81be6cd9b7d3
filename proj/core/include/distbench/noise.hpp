#ifndef DISTBENCH_NOISE_HPP
#define DISTBENCH_NOISE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "distbench/dataset.hpp"

namespace distbench {

struct NoiseSpec {
    /// Fraction of examples to corrupt, in [0, 1).
    double level = 0.0;
    std::uint64_t seed = 0;
};

/// round-half-up(level * n)
std::size_t noisy_count(std::size_t n, double level);

/// The distinct rows inject() corrupts for this spec, in selection order.
std::vector<std::size_t> noisy_rows(std::size_t n, const NoiseSpec& spec);

/// Attribute noise: noisy_count() distinct examples get every attribute
/// replaced by an independent uniform draw in [attr_min, attr_max]. Labels and
/// the remaining rows are untouched. Throws Error(InvalidArgument) for a level
/// outside [0, 1).
Dataset inject(const Dataset& ds, const NoiseSpec& spec);

}  // namespace distbench

#endif
