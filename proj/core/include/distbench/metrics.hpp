#ifndef DISTBENCH_METRICS_HPP
#define DISTBENCH_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

/**
 * @file metrics.hpp
 *
 * Registry of the 54 distance and similarity measures, grouped into eight
 * families. Every measure is a pure kernel over two equal-length vectors.
 * Kernels never return NaN or infinity for finite inputs inside the measure's
 * domain: zero denominators and non-positive logarithm arguments are resolved
 * by a GuardPolicy.
 */

namespace distbench {

enum class MetricId : std::uint8_t {
    // Lp Minkowski
    MD, CD, ED,
    // L1
    LD, CanD, SD, SoD, KD, MCD, NID,
    // inner product
    JacD, CosD, DicD, ChoD,
    // squared chord
    BD, SCD, MatD, HeD,
    // squared L2
    SED, ClaD, NCSD, PCSD, SquD, PSCSD, DivD, ASCSD, AD, MCED, SCSD,
    // Shannon entropy
    KLD, JefD, KDD, TopD, JSD, JDD,
    // vicissitude
    VWHD, VSDF1, VSDF2, VSDF3, MSCD, MiSCSD,
    // other
    AvgD, KJD, TanD, PeaD, CorD, SPeaD, HamD, HauD, CSSD, WIAD, MeeD, MotD, HasD,
};

inline constexpr std::size_t kMetricCount = 54;

enum class Family {
    Minkowski,
    L1,
    InnerProduct,
    SquaredChord,
    SquaredL2,
    ShannonEntropy,
    Vicissitude,
    Other,
};

std::string_view to_string(Family family) noexcept;

/// Properties that hold over the measure's whole input domain.
struct MetricFlags {
    bool symmetric = false;
    /// d(x, x) == 0. For CosD, DicD and ChoD this needs a nonzero vector and
    /// for PeaD, CorD and SPeaD a non-constant one; on such degenerate inputs
    /// those measures return their zero-norm / zero-variance convention.
    bool zero_self = false;
    bool nonneg_output = false;
    /// All four metric axioms.
    bool full_metric = false;
    /// Negative components are rejected with Errc::DomainViolation.
    bool requires_nonneg_inputs = false;
};

enum class GuardMode {
    /// The offending term contributes 0.
    TermIsZero,
    /// 0/0 and 0*log(0) terms contribute 0; anything else uses epsilon in
    /// place of the zero denominator or non-positive log argument.
    EpsilonSubstitute,
};

struct GuardPolicy {
    GuardMode zero_denominator = GuardMode::EpsilonSubstitute;
    GuardMode log_nonpositive = GuardMode::EpsilonSubstitute;
    double epsilon = 1e-12;
};

using Vector = std::span<const double>;
using Kernel = double (*)(Vector x, Vector y, const GuardPolicy& guard);

struct MetricDescriptor {
    MetricId id;
    std::string_view abbrev;
    std::string_view name;
    Family family;
    MetricFlags flags;
    GuardPolicy guard;
    /// Unchecked kernel: no dimension or domain validation.
    Kernel kernel;
};

/// All 54 descriptors in MetricId order.
std::span<const MetricDescriptor> registry() noexcept;

const MetricDescriptor& describe(MetricId id) noexcept;

/// Throws Error(UnknownMetric).
const MetricDescriptor& describe(std::string_view abbrev);

std::optional<MetricId> find_metric(std::string_view abbrev) noexcept;

/// Throws Error(DomainViolation) if the metric needs nonnegative inputs and
/// `v` has a negative component.
void check_domain(const MetricDescriptor& metric, Vector v);

/// Validated dissimilarity between x and y under the descriptor's guard.
/// Throws Error(DimensionMismatch) for unequal or zero length and
/// Error(DomainViolation) for inputs outside the metric's domain.
double evaluate(const MetricDescriptor& metric, Vector x, Vector y);
double evaluate(const MetricDescriptor& metric, Vector x, Vector y, const GuardPolicy& guard);
double evaluate(MetricId id, Vector x, Vector y);
double evaluate(std::string_view abbrev, Vector x, Vector y);

// Per-family entry points. Each throws Error(InvalidArgument) when `which`
// belongs to a different family, otherwise behaves like evaluate().
double minkowski_family(MetricId which, Vector x, Vector y);
double l1_family(MetricId which, Vector x, Vector y);
double inner_product_family(MetricId which, Vector x, Vector y);
double squared_chord_family(MetricId which, Vector x, Vector y);
double squared_l2_family(MetricId which, Vector x, Vector y);
double shannon_family(MetricId which, Vector x, Vector y);
double vicissitude_family(MetricId which, Vector x, Vector y);
double other_family(MetricId which, Vector x, Vector y);

/// s = 1 - d, meaningful only when d lies in [0, 1].
inline double similarity_from_distance(double d) noexcept { return 1.0 - d; }

}  // namespace distbench

#endif
