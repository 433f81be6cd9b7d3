#ifndef DISTBENCH_ERROR_HPP
#define DISTBENCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace distbench {

enum class Errc {
    MissingValue,
    NonNumeric,
    EmptyDataset,
    InconsistentArity,
    TooSmall,
    DimensionMismatch,
    DomainViolation,
    UnknownMetric,
    LengthMismatch,
    ClassOutOfRange,
    InvalidArgument,
    InvalidConfig,
    Io,
};

std::string_view to_string(Errc code) noexcept;

/// Every library failure is reported as an Error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace distbench

#endif
