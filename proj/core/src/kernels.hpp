// Internal: raw kernels behind the metric registry. Inputs are assumed to be
// validated (equal nonzero length, domain respected).
#ifndef DISTBENCH_SRC_KERNELS_HPP
#define DISTBENCH_SRC_KERNELS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "distbench/metrics.hpp"

namespace distbench::kernels {

/// num / den with the zero-denominator rule applied.
inline double guarded_div(double num, double den, const GuardPolicy& g) noexcept {
    if (den != 0.0) {
        return num / den;
    }
    if (num == 0.0 || g.zero_denominator == GuardMode::TermIsZero) {
        return 0.0;
    }
    return num / g.epsilon;
}

/// coef * ln(arg), with 0 * ln(anything) == 0 and the log rule for arg <= 0.
inline double log_term(double coef, double arg, const GuardPolicy& g) noexcept {
    if (coef == 0.0) {
        return 0.0;
    }
    if (arg > 0.0) {
        return coef * std::log(arg);
    }
    if (g.log_nonpositive == GuardMode::TermIsZero) {
        return 0.0;
    }
    return coef * std::log(g.epsilon);
}

/// ln(v) for v > 0, ln(epsilon) otherwise. Callers handle TermIsZero.
inline double guarded_ln(double v, const GuardPolicy& g) noexcept {
    return v > 0.0 ? std::log(v) : std::log(g.epsilon);
}

#define DISTBENCH_KERNEL(fn) double fn(Vector x, Vector y, const GuardPolicy& g)

// Lp Minkowski
DISTBENCH_KERNEL(manhattan);
DISTBENCH_KERNEL(chebyshev);
DISTBENCH_KERNEL(euclidean);
// L1
DISTBENCH_KERNEL(lorentzian);
DISTBENCH_KERNEL(canberra);
DISTBENCH_KERNEL(sorensen);
DISTBENCH_KERNEL(soergel);
DISTBENCH_KERNEL(kulczynski);
DISTBENCH_KERNEL(mean_character);
DISTBENCH_KERNEL(non_intersection);
// inner product
DISTBENCH_KERNEL(jaccard);
DISTBENCH_KERNEL(cosine);
DISTBENCH_KERNEL(dice);
DISTBENCH_KERNEL(chord);
// squared chord
DISTBENCH_KERNEL(bhattacharyya);
DISTBENCH_KERNEL(squared_chord);
DISTBENCH_KERNEL(matusita);
DISTBENCH_KERNEL(hellinger);
// squared L2
DISTBENCH_KERNEL(squared_euclidean);
DISTBENCH_KERNEL(clark);
DISTBENCH_KERNEL(neyman_chi2);
DISTBENCH_KERNEL(pearson_chi2);
DISTBENCH_KERNEL(squared_chi2);
DISTBENCH_KERNEL(prob_symmetric_chi2);
DISTBENCH_KERNEL(divergence);
DISTBENCH_KERNEL(additive_symmetric_chi2);
DISTBENCH_KERNEL(average_euclidean);
DISTBENCH_KERNEL(mean_censored_euclidean);
DISTBENCH_KERNEL(squared_chi_squared);
// Shannon entropy
DISTBENCH_KERNEL(kullback_leibler);
DISTBENCH_KERNEL(jeffreys);
DISTBENCH_KERNEL(k_divergence);
DISTBENCH_KERNEL(topsoe);
DISTBENCH_KERNEL(jensen_shannon);
DISTBENCH_KERNEL(jensen_difference);
// vicissitude
DISTBENCH_KERNEL(vicis_wave_hedges);
DISTBENCH_KERNEL(vicis_symmetric1);
DISTBENCH_KERNEL(vicis_symmetric2);
DISTBENCH_KERNEL(vicis_symmetric3);
DISTBENCH_KERNEL(max_symmetric_chi2);
DISTBENCH_KERNEL(min_symmetric_chi2);
// other
DISTBENCH_KERNEL(average_l1_linf);
DISTBENCH_KERNEL(kumar_johnson);
DISTBENCH_KERNEL(taneja);
DISTBENCH_KERNEL(pearson);
DISTBENCH_KERNEL(correlation);
DISTBENCH_KERNEL(squared_pearson);
DISTBENCH_KERNEL(hamming);
DISTBENCH_KERNEL(hausdorff);
DISTBENCH_KERNEL(chi2_statistic);
DISTBENCH_KERNEL(whittaker);
DISTBENCH_KERNEL(meehl);
DISTBENCH_KERNEL(motyka);
DISTBENCH_KERNEL(hassanat);

#undef DISTBENCH_KERNEL

}  // namespace distbench::kernels

#endif
