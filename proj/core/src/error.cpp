#include "distbench/error.hpp"

namespace distbench {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::MissingValue: return "MissingValue";
        case Errc::NonNumeric: return "NonNumeric";
        case Errc::EmptyDataset: return "EmptyDataset";
        case Errc::InconsistentArity: return "InconsistentArity";
        case Errc::TooSmall: return "TooSmall";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::DomainViolation: return "DomainViolation";
        case Errc::UnknownMetric: return "UnknownMetric";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::ClassOutOfRange: return "ClassOutOfRange";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InvalidConfig: return "InvalidConfig";
        case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace distbench
