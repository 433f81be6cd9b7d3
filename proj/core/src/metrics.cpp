#include "distbench/metrics.hpp"

#include <array>
#include <string>

#include "distbench/error.hpp"
#include "kernels.hpp"

namespace distbench {

namespace {

namespace k = kernels;

// symmetric, zero_self, nonneg_output, full_metric, requires_nonneg_inputs
constexpr MetricFlags flags(bool sym, bool zero, bool nonneg, bool metric, bool nonneg_in) {
    return MetricFlags{sym, zero, nonneg, metric, nonneg_in};
}

constexpr MetricFlags kMetric = flags(true, true, true, true, false);
constexpr MetricFlags kSymNonneg = flags(true, true, true, false, false);
constexpr MetricFlags kSymSigned = flags(true, true, false, false, false);
constexpr MetricFlags kAsymSigned = flags(false, true, false, false, false);

constexpr MetricDescriptor entry(MetricId id, std::string_view abbrev, std::string_view name, Family family,
                                 MetricFlags f, Kernel kernel) {
    return MetricDescriptor{id, abbrev, name, family, f, GuardPolicy{}, kernel};
}

using F = Family;
using M = MetricId;

constexpr std::array<MetricDescriptor, kMetricCount> kRegistry{{
    entry(M::MD, "MD", "Manhattan", F::Minkowski, kMetric, k::manhattan),
    entry(M::CD, "CD", "Chebyshev", F::Minkowski, kMetric, k::chebyshev),
    entry(M::ED, "ED", "Euclidean", F::Minkowski, kMetric, k::euclidean),

    entry(M::LD, "LD", "Lorentzian", F::L1, kMetric, k::lorentzian),
    entry(M::CanD, "CanD", "Canberra", F::L1, kMetric, k::canberra),
    entry(M::SD, "SD", "Sorensen", F::L1, kSymSigned, k::sorensen),
    entry(M::SoD, "SoD", "Soergel", F::L1, kSymSigned, k::soergel),
    entry(M::KD, "KD", "Kulczynski", F::L1, kSymSigned, k::kulczynski),
    entry(M::MCD, "MCD", "Mean Character", F::L1, kMetric, k::mean_character),
    entry(M::NID, "NID", "Non Intersection", F::L1, kMetric, k::non_intersection),

    entry(M::JacD, "JacD", "Jaccard", F::InnerProduct, kSymNonneg, k::jaccard),
    entry(M::CosD, "CosD", "Cosine", F::InnerProduct, kSymNonneg, k::cosine),
    entry(M::DicD, "DicD", "Dice", F::InnerProduct, kSymNonneg, k::dice),
    entry(M::ChoD, "ChoD", "Chord", F::InnerProduct, kSymNonneg, k::chord),

    entry(M::BD, "BD", "Bhattacharyya", F::SquaredChord, flags(true, false, false, false, true), k::bhattacharyya),
    entry(M::SCD, "SCD", "Squared Chord", F::SquaredChord, flags(true, true, true, false, true), k::squared_chord),
    entry(M::MatD, "MatD", "Matusita", F::SquaredChord, flags(true, true, true, true, true), k::matusita),
    entry(M::HeD, "HeD", "Hellinger", F::SquaredChord, flags(true, true, true, true, true), k::hellinger),

    entry(M::SED, "SED", "Squared Euclidean", F::SquaredL2, kSymNonneg, k::squared_euclidean),
    entry(M::ClaD, "ClaD", "Clark", F::SquaredL2, kSymNonneg, k::clark),
    entry(M::NCSD, "NCSD", "Neyman chi2", F::SquaredL2, kAsymSigned, k::neyman_chi2),
    entry(M::PCSD, "PCSD", "Pearson chi2", F::SquaredL2, kAsymSigned, k::pearson_chi2),
    entry(M::SquD, "SquD", "Squared chi2", F::SquaredL2, kSymSigned, k::squared_chi2),
    entry(M::PSCSD, "PSCSD", "Probabilistic Symmetric chi2", F::SquaredL2, kSymSigned, k::prob_symmetric_chi2),
    entry(M::DivD, "DivD", "Divergence", F::SquaredL2, kSymNonneg, k::divergence),
    entry(M::ASCSD, "ASCSD", "Additive Symmetric chi2", F::SquaredL2, kSymSigned, k::additive_symmetric_chi2),
    entry(M::AD, "AD", "Average", F::SquaredL2, kMetric, k::average_euclidean),
    entry(M::MCED, "MCED", "Mean Censored Euclidean", F::SquaredL2, kSymNonneg, k::mean_censored_euclidean),
    entry(M::SCSD, "SCSD", "Squared Chi-Squared", F::SquaredL2, kSymNonneg, k::squared_chi_squared),

    entry(M::KLD, "KLD", "Kullback-Leibler", F::ShannonEntropy, flags(false, true, false, false, true), k::kullback_leibler),
    entry(M::JefD, "JefD", "Jeffreys", F::ShannonEntropy, flags(true, true, true, false, true), k::jeffreys),
    entry(M::KDD, "KDD", "K divergence", F::ShannonEntropy, flags(false, true, false, false, true), k::k_divergence),
    entry(M::TopD, "TopD", "Topsoe", F::ShannonEntropy, flags(true, true, true, false, true), k::topsoe),
    entry(M::JSD, "JSD", "Jensen-Shannon", F::ShannonEntropy, flags(true, true, true, false, true), k::jensen_shannon),
    entry(M::JDD, "JDD", "Jensen difference", F::ShannonEntropy, flags(true, true, true, false, true), k::jensen_difference),

    entry(M::VWHD, "VWHD", "Vicis-Wave Hedges", F::Vicissitude, kSymSigned, k::vicis_wave_hedges),
    entry(M::VSDF1, "VSDF1", "Vicis Symmetric 1", F::Vicissitude, kSymNonneg, k::vicis_symmetric1),
    entry(M::VSDF2, "VSDF2", "Vicis Symmetric 2", F::Vicissitude, kSymSigned, k::vicis_symmetric2),
    entry(M::VSDF3, "VSDF3", "Vicis Symmetric 3", F::Vicissitude, kSymSigned, k::vicis_symmetric3),
    entry(M::MSCD, "MSCD", "Max Symmetric chi2", F::Vicissitude, kSymSigned, k::max_symmetric_chi2),
    entry(M::MiSCSD, "MiSCSD", "Min Symmetric chi2", F::Vicissitude, kSymSigned, k::min_symmetric_chi2),

    entry(M::AvgD, "AvgD", "Average (L1, Linf)", F::Other, kMetric, k::average_l1_linf),
    entry(M::KJD, "KJD", "Kumar-Johnson", F::Other, flags(true, false, true, false, true), k::kumar_johnson),
    entry(M::TanD, "TanD", "Taneja", F::Other, flags(true, true, true, false, true), k::taneja),
    entry(M::PeaD, "PeaD", "Pearson", F::Other, kSymNonneg, k::pearson),
    entry(M::CorD, "CorD", "Correlation", F::Other, kSymNonneg, k::correlation),
    entry(M::SPeaD, "SPeaD", "Squared Pearson", F::Other, kSymNonneg, k::squared_pearson),
    entry(M::HamD, "HamD", "Hamming", F::Other, kMetric, k::hamming),
    entry(M::HauD, "HauD", "Hausdorff", F::Other, kSymNonneg, k::hausdorff),
    entry(M::CSSD, "CSSD", "chi2 statistic", F::Other, kAsymSigned, k::chi2_statistic),
    entry(M::WIAD, "WIAD", "Whittaker's index of association", F::Other, kSymNonneg, k::whittaker),
    entry(M::MeeD, "MeeD", "Meehl", F::Other, kSymNonneg, k::meehl),
    entry(M::MotD, "MotD", "Motyka", F::Other, flags(true, false, false, false, false), k::motyka),
    entry(M::HasD, "HasD", "Hassanat", F::Other, kMetric, k::hassanat),
}};

constexpr bool registry_is_ordered() {
    for (std::size_t i = 0; i < kRegistry.size(); ++i) {
        if (static_cast<std::size_t>(kRegistry[i].id) != i) {
            return false;
        }
        const MetricFlags& f = kRegistry[i].flags;
        if (f.full_metric && !(f.symmetric && f.zero_self && f.nonneg_output)) {
            return false;
        }
    }
    return true;
}
static_assert(registry_is_ordered());

double family_dispatch(Family family, MetricId which, Vector x, Vector y) {
    const MetricDescriptor& m = describe(which);
    if (m.family != family) {
        throw Error(Errc::InvalidArgument,
                    std::string(m.abbrev) + " is not in the " + std::string(to_string(family)) + " family");
    }
    return evaluate(m, x, y);
}

}  // namespace

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::Minkowski: return "Minkowski";
        case Family::L1: return "L1";
        case Family::InnerProduct: return "InnerProduct";
        case Family::SquaredChord: return "SquaredChord";
        case Family::SquaredL2: return "SquaredL2";
        case Family::ShannonEntropy: return "ShannonEntropy";
        case Family::Vicissitude: return "Vicissitude";
        case Family::Other: return "Other";
    }
    return "?";
}

std::span<const MetricDescriptor> registry() noexcept { return kRegistry; }

const MetricDescriptor& describe(MetricId id) noexcept { return kRegistry[static_cast<std::size_t>(id)]; }

std::optional<MetricId> find_metric(std::string_view abbrev) noexcept {
    for (const auto& m : kRegistry) {
        if (m.abbrev == abbrev) {
            return m.id;
        }
    }
    return std::nullopt;
}

const MetricDescriptor& describe(std::string_view abbrev) {
    if (const auto id = find_metric(abbrev)) {
        return describe(*id);
    }
    throw Error(Errc::UnknownMetric, std::string(abbrev));
}

void check_domain(const MetricDescriptor& metric, Vector v) {
    if (!metric.flags.requires_nonneg_inputs) {
        return;
    }
    for (const double c : v) {
        if (c < 0.0) {
            throw Error(Errc::DomainViolation,
                        std::string(metric.abbrev) + " requires nonnegative components, got " + std::to_string(c));
        }
    }
}

double evaluate(const MetricDescriptor& metric, Vector x, Vector y, const GuardPolicy& guard) {
    if (x.size() != y.size() || x.empty()) {
        throw Error(Errc::DimensionMismatch,
                    "vectors of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    }
    check_domain(metric, x);
    check_domain(metric, y);
    return metric.kernel(x, y, guard);
}

double evaluate(const MetricDescriptor& metric, Vector x, Vector y) { return evaluate(metric, x, y, metric.guard); }

double evaluate(MetricId id, Vector x, Vector y) { return evaluate(describe(id), x, y); }

double evaluate(std::string_view abbrev, Vector x, Vector y) { return evaluate(describe(abbrev), x, y); }

double minkowski_family(MetricId which, Vector x, Vector y) { return family_dispatch(Family::Minkowski, which, x, y); }
double l1_family(MetricId which, Vector x, Vector y) { return family_dispatch(Family::L1, which, x, y); }
double inner_product_family(MetricId which, Vector x, Vector y) {
    return family_dispatch(Family::InnerProduct, which, x, y);
}
double squared_chord_family(MetricId which, Vector x, Vector y) {
    return family_dispatch(Family::SquaredChord, which, x, y);
}
double squared_l2_family(MetricId which, Vector x, Vector y) { return family_dispatch(Family::SquaredL2, which, x, y); }
double shannon_family(MetricId which, Vector x, Vector y) {
    return family_dispatch(Family::ShannonEntropy, which, x, y);
}
double vicissitude_family(MetricId which, Vector x, Vector y) {
    return family_dispatch(Family::Vicissitude, which, x, y);
}
double other_family(MetricId which, Vector x, Vector y) { return family_dispatch(Family::Other, which, x, y); }

}  // namespace distbench
