#include "gtb/error.hpp"

namespace gtb {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyNodes: return "EmptyNodes";
        case ErrorCode::UnsortedNodes: return "UnsortedNodes";
        case ErrorCode::DegenerateRange: return "DegenerateRange";
        case ErrorCode::NonPositiveCoefficient: return "NonPositiveCoefficient";
        case ErrorCode::NonPositiveScale: return "NonPositiveScale";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::UnsortedParams: return "UnsortedParams";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::BadIndexSet: return "BadIndexSet";
        case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
        case ErrorCode::BadCount: return "BadCount";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::Diverged: return "Diverged";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gtb
