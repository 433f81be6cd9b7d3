// Measures that combine ideas from the other families.
#include <vector>

#include "kernels.hpp"

namespace distbench::kernels {

namespace {

// Pearson correlation; 0 when either vector has zero variance.
double pearson_r(Vector x, Vector y) noexcept {
    const double n = static_cast<double>(x.size());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double cxy = 0.0;
    double cxx = 0.0;
    double cyy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        cxy += dx * dy;
        cxx += dx * dx;
        cyy += dy * dy;
    }
    if (cxx == 0.0 || cyy == 0.0) {
        return 0.0;
    }
    return std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0);
}

// max over a of min over b |a - b|, both sorted ascending.
double directed_hausdorff(const std::vector<double>& a, const std::vector<double>& b) noexcept {
    double worst = 0.0;
    std::size_t j = 0;
    for (const double v : a) {
        while (j + 1 < b.size() && b[j + 1] <= v) {
            ++j;
        }
        double best = std::abs(v - b[j]);
        if (j + 1 < b.size()) {
            best = std::min(best, std::abs(b[j + 1] - v));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double average_l1_linf(Vector x, Vector y, const GuardPolicy&) {
    double sum = 0.0;
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = std::abs(x[i] - y[i]);
        sum += d;
        m = std::max(m, d);
    }
    return 0.5 * (sum + m);
}

double kumar_johnson(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double q = x[i] * x[i] + y[i] * y[i];
        const double p = x[i] * y[i];
        sum += guarded_div(q * q, 2.0 * p * std::sqrt(p), g);
    }
    return sum;
}

double taneja(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double s = x[i] + y[i];
        const double ratio = guarded_div(s, 2.0 * std::sqrt(x[i] * y[i]), g);
        sum += std::max(0.0, log_term(0.5 * s, ratio, g));
    }
    return sum;
}

double pearson(Vector x, Vector y, const GuardPolicy&) { return 1.0 - pearson_r(x, y); }

double correlation(Vector x, Vector y, const GuardPolicy&) { return 0.5 * (1.0 - pearson_r(x, y)); }

double squared_pearson(Vector x, Vector y, const GuardPolicy&) {
    const double r = pearson_r(x, y);
    return 1.0 - r * r;
}

double hamming(Vector x, Vector y, const GuardPolicy&) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        count += x[i] != y[i] ? 1 : 0;
    }
    return static_cast<double>(count);
}

// Coordinates are treated as two sets of scalars.
double hausdorff(Vector x, Vector y, const GuardPolicy&) {
    thread_local std::vector<double> a;
    thread_local std::vector<double> b;
    a.assign(x.begin(), x.end());
    b.assign(y.begin(), y.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double chi2_statistic(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double m = 0.5 * (x[i] + y[i]);
        sum += guarded_div(x[i] - m, m, g);
    }
    return sum;
}

double whittaker(Vector x, Vector y, const GuardPolicy& g) {
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += std::abs(guarded_div(x[i], sx, g) - guarded_div(y[i], sy, g));
    }
    return 0.5 * sum;
}

double meehl(Vector x, Vector y, const GuardPolicy&) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double t = (x[i] - y[i]) - (x[i + 1] - y[i + 1]);
        sum += t * t;
    }
    return sum;
}

double motyka(Vector x, Vector y, const GuardPolicy& g) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += std::max(x[i], y[i]);
        den += x[i] + y[i];
    }
    return guarded_div(num, den, g);
}

// Per dimension: 1 - (1 + lo) / (1 + hi) when lo >= 0, otherwise
// 1 - (1 + lo + |lo|) / (1 + hi + |lo|). Each term lies in [0, 1).
double hassanat(Vector x, Vector y, const GuardPolicy&) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lo = std::min(x[i], y[i]);
        const double hi = std::max(x[i], y[i]);
        if (lo >= 0.0) {
            sum += 1.0 - (1.0 + lo) / (1.0 + hi);
        } else {
            sum += 1.0 - 1.0 / (1.0 + hi - lo);
        }
    }
    return sum;
}

}  // namespace distbench::kernels
