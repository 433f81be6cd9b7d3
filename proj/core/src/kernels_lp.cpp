// Minkowski, L1, inner-product and squared-chord families.
#include "kernels.hpp"

namespace distbench::kernels {

namespace {

double abs_diff_sum(Vector x, Vector y) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += std::abs(x[i] - y[i]);
    }
    return sum;
}

double squared_diff_sum(Vector x, Vector y) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += d * d;
    }
    return sum;
}

double sqrt_diff_sum(Vector x, Vector y) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = std::sqrt(x[i]) - std::sqrt(y[i]);
        sum += d * d;
    }
    return sum;
}

struct Products {
    double xx = 0.0;
    double yy = 0.0;
    double xy = 0.0;
};

Products products(Vector x, Vector y) noexcept {
    Products p;
    for (std::size_t i = 0; i < x.size(); ++i) {
        p.xx += x[i] * x[i];
        p.yy += y[i] * y[i];
        p.xy += x[i] * y[i];
    }
    return p;
}

}  // namespace

double manhattan(Vector x, Vector y, const GuardPolicy&) { return abs_diff_sum(x, y); }

double chebyshev(Vector x, Vector y, const GuardPolicy&) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        m = std::max(m, std::abs(x[i] - y[i]));
    }
    return m;
}

double euclidean(Vector x, Vector y, const GuardPolicy&) { return std::sqrt(squared_diff_sum(x, y)); }

double lorentzian(Vector x, Vector y, const GuardPolicy&) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += std::log1p(std::abs(x[i] - y[i]));
    }
    return sum;
}

double canberra(Vector x, Vector y, const GuardPolicy& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += guarded_div(std::abs(x[i] - y[i]), std::abs(x[i]) + std::abs(y[i]), g);
    }
    return sum;
}

double sorensen(Vector x, Vector y, const GuardPolicy& g) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += std::abs(x[i] - y[i]);
        den += x[i] + y[i];
    }
    return guarded_div(num, den, g);
}

double soergel(Vector x, Vector y, const GuardPolicy& g) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += std::abs(x[i] - y[i]);
        den += std::max(x[i], y[i]);
    }
    return guarded_div(num, den, g);
}

double kulczynski(Vector x, Vector y, const GuardPolicy& g) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += std::abs(x[i] - y[i]);
        den += std::min(x[i], y[i]);
    }
    return guarded_div(num, den, g);
}

double mean_character(Vector x, Vector y, const GuardPolicy&) {
    return abs_diff_sum(x, y) / static_cast<double>(x.size());
}

double non_intersection(Vector x, Vector y, const GuardPolicy&) { return 0.5 * abs_diff_sum(x, y); }

double jaccard(Vector x, Vector y, const GuardPolicy& g) {
    const Products p = products(x, y);
    return guarded_div(squared_diff_sum(x, y), p.xx + p.yy - p.xy, g);
}

double cosine(Vector x, Vector y, const GuardPolicy& g) {
    const Products p = products(x, y);
    const double c = guarded_div(p.xy, std::sqrt(p.xx) * std::sqrt(p.yy), g);
    return std::max(0.0, 1.0 - c);
}

double dice(Vector x, Vector y, const GuardPolicy& g) {
    const Products p = products(x, y);
    return std::max(0.0, 1.0 - guarded_div(2.0 * p.xy, p.xx + p.yy, g));
}

// sqrt(2 - 2 <x,y> / (|x| |y|)), evaluated as the distance between the two
// unit vectors so that identical inputs give exactly 0.
double chord(Vector x, Vector y, const GuardPolicy&) {
    const Products p = products(x, y);
    const double nx = std::sqrt(p.xx);
    const double ny = std::sqrt(p.yy);
    if (nx == 0.0 || ny == 0.0) {
        // The cosine term is 0/0 or 0/eps, i.e. 0.
        return std::sqrt(2.0);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] / nx - y[i] / ny;
        sum += d * d;
    }
    return std::sqrt(sum);
}

double bhattacharyya(Vector x, Vector y, const GuardPolicy& g) {
    double bc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        bc += std::sqrt(x[i] * y[i]);
    }
    return log_term(-1.0, bc, g);
}

double squared_chord(Vector x, Vector y, const GuardPolicy&) { return sqrt_diff_sum(x, y); }

double matusita(Vector x, Vector y, const GuardPolicy&) { return std::sqrt(sqrt_diff_sum(x, y)); }

double hellinger(Vector x, Vector y, const GuardPolicy&) { return std::sqrt(2.0 * sqrt_diff_sum(x, y)); }

}  // namespace distbench::kernels
