#ifndef DISTBENCH_STATS_HPP
#define DISTBENCH_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace distbench {

enum class PValueMethod {
    /// Exact up to kExactLimit pooled observations, normal approximation above.
    Auto,
    /// Permutation distribution of the statistic, ties included.
    Exact,
    /// Normal approximation with tie and continuity corrections.
    Normal,
};

inline constexpr std::size_t kExactLimit = 30;

/// 1-based ranks; tied values receive the mean of the ranks they span.
std::vector<double> midranks(std::span<const double> values);

/// Two-sided Wilcoxon rank-sum (Mann-Whitney) p-value for independent
/// samples. Returns 1.0 when every pooled value is identical. Throws
/// Error(InvalidArgument) if a sample is empty.
double wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                         PValueMethod method = PValueMethod::Auto);

/// Two-sided Wilcoxon signed-rank p-value for paired samples; zero
/// differences are dropped. Throws Error(LengthMismatch) for unequal lengths.
double wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                            PValueMethod method = PValueMethod::Auto);

}  // namespace distbench

#endif
