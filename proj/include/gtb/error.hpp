#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtb {

enum class ErrorCode {
    EmptyNodes,
    UnsortedNodes,
    DegenerateRange,
    NonPositiveCoefficient,
    NonPositiveScale,
    NonPositiveWeight,
    LengthMismatch,
    OutOfDomain,
    IndexOutOfRange,
    ZeroDenominator,
    NonFinite,
    UnsortedParams,
    InvalidSpec,
    BadIndexSet,
    TooLargeForExhaustive,
    BadCount,
    CountMismatch,
    DimensionMismatch,
    BadParams,
    Diverged,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so callers (the CLI in
// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace gtb
