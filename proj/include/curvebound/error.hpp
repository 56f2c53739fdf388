#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvebound {

enum class ErrorCode {
    IncompatibleRadicand,
    NegativeRadicand,
    DivisionByZero,
    ParseError,
    InvariantViolation,
    InvalidArgument,
    UnsupportedDimension,
    ArityMismatch,
    EvidenceInconsistentWithDegree,
    InconsistentEvidence,
    DegenerateInput,
    NonpositiveEpsilon,
    NonpositiveGamma,
    NonpositiveEta,
    NoEvidence,
    NullCorrelationExcluded,
    LambdaNegative,
    UnboundedBox,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// CLI maps to exit statuses and JSON error objects.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), message_(message) {}

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace curvebound
