// Squared L2, Shannon entropy and vicissitude families.
#include "kernels.hpp"

namespace distbench::kernels {

namespace {

double sed(Vector x, Vector y) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += d * d;
    }
    return sum;
}

// sum (x - y)^2 / x
double neyman_sum(Vector x, Vector y, const GuardPolicy& g) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += guarded_div(d * d, x[i], g);
    }
    return sum;
}

double squ_sum(Vector x, Vector y, const GuardPolicy& g) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += guarded_div(d * d, x[i] + y[i], g);
    }
    return sum;
}

// Per-dimension x ln(2x/(x+y)) + y ln(2y/(x+y)); nonnegative by convexity.
double topsoe_sum(Vector x, Vector y, const GuardPolicy& g) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = x[i] + y[i];
        const double t = log_term(x[i], guarded_div(2.0 * x[i], s, g), g) +
                         log_term(y[i], guarded_div(2.0 * y[i], s, g), g);
        sum += std::max(0.0, t);
    }
    return sum;
}

// t ln t with 0 ln 0 = 0
double xlogx(double t, const GuardPolicy& g) noexcept { return log_term(t, t, g); }

}  // namespace

double squared_euclidean(Vector x, Vector y, const GuardPolicy&) { return sed(x, y); }

double clark(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = guarded_div(std::abs(x[i] - y[i]), x[i] + y[i], g);
        sum += r * r;
    }
    return std::sqrt(sum);
}

double neyman_chi2(Vector x, Vector y, const GuardPolicy& g) { return neyman_sum(x, y, g); }

double pearson_chi2(Vector x, Vector y, const GuardPolicy& g) { return neyman_sum(y, x, g); }

double squared_chi2(Vector x, Vector y, const GuardPolicy& g) { return squ_sum(x, y, g); }

double prob_symmetric_chi2(Vector x, Vector y, const GuardPolicy& g) { return 2.0 * squ_sum(x, y, g); }

double divergence(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        const double s = x[i] + y[i];
        sum += guarded_div(d * d, s * s, g);
    }
    return 2.0 * sum;
}

double additive_symmetric_chi2(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += guarded_div(d * d * (x[i] + y[i]), x[i] * y[i], g);
    }
    return 2.0 * sum;
}

double average_euclidean(Vector x, Vector y, const GuardPolicy&) {
    return std::sqrt(sed(x, y) / static_cast<double>(x.size()));
}

double mean_censored_euclidean(Vector x, Vector y, const GuardPolicy&) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += d * d;
        if (x[i] * x[i] + y[i] * y[i] != 0.0) {
            ++count;
        }
    }
    return count == 0 ? 0.0 : std::sqrt(sum / static_cast<double>(count));
}

double squared_chi_squared(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += guarded_div(d * d, std::abs(x[i] + y[i]), g);
    }
    return sum;
}

double kullback_leibler(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += log_term(x[i], guarded_div(x[i], y[i], g), g);
    }
    return sum;
}

// (x - y)(ln x - ln y) keeps the kernel exactly symmetric.
double jeffreys(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        if (d == 0.0) {
            continue;
        }
        if ((x[i] <= 0.0 || y[i] <= 0.0) && g.log_nonpositive == GuardMode::TermIsZero) {
            continue;
        }
        sum += std::max(0.0, d * (guarded_ln(x[i], g) - guarded_ln(y[i], g)));
    }
    return sum;
}

double k_divergence(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += log_term(x[i], guarded_div(2.0 * x[i], x[i] + y[i], g), g);
    }
    return sum;
}

double topsoe(Vector x, Vector y, const GuardPolicy& g) { return topsoe_sum(x, y, g); }

double jensen_shannon(Vector x, Vector y, const GuardPolicy& g) { return 0.5 * topsoe_sum(x, y, g); }

double jensen_difference(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double m = 0.5 * (x[i] + y[i]);
        const double t = 0.5 * (xlogx(x[i], g) + xlogx(y[i], g)) - xlogx(m, g);
        sum += std::max(0.0, t);
    }
    return 0.5 * sum;
}

double vicis_wave_hedges(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += guarded_div(std::abs(x[i] - y[i]), std::min(x[i], y[i]), g);
    }
    return sum;
}

double vicis_symmetric1(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        const double m = std::min(x[i], y[i]);
        sum += guarded_div(d * d, m * m, g);
    }
    return sum;
}

double vicis_symmetric2(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += guarded_div(d * d, std::min(x[i], y[i]), g);
    }
    return sum;
}

double vicis_symmetric3(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += guarded_div(d * d, std::max(x[i], y[i]), g);
    }
    return sum;
}

double max_symmetric_chi2(Vector x, Vector y, const GuardPolicy& g) {
    return std::max(neyman_sum(x, y, g), neyman_sum(y, x, g));
}

double min_symmetric_chi2(Vector x, Vector y, const GuardPolicy& g) {
    return std::min(neyman_sum(x, y, g), neyman_sum(y, x, g));
}

}  // namespace distbench::kernels
