#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (unsupported input -> 2, budget/size limits -> 3).
enum class ErrorKind {
    LoopsNotAllowed,
    CardinalityExceedsN,
    ParseError,
    InvariantViolation,
    SpecMismatch,
    MultiplicityExceedsPart,
    WrongEdgeTypes,
    DomainMismatch,
    TooLarge,
    UnknownName,
    DimensionMismatch,
    ConvergenceFailure,
    BudgetExceeded,
    UnsupportedTypes,
    InvalidR,
    Overflow,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopsNotAllowed: return "LoopsNotAllowed";
        case ErrorKind::CardinalityExceedsN: return "CardinalityExceedsN";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::MultiplicityExceedsPart: return "MultiplicityExceedsPart";
        case ErrorKind::WrongEdgeTypes: return "WrongEdgeTypes";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::UnsupportedTypes: return "UnsupportedTypes";
        case ErrorKind::InvalidR: return "InvalidR";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Error";
}

} // namespace turan
