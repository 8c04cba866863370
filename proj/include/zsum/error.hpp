#pragma once

#include <stdexcept>
#include <string>

namespace zsum {

enum class ErrorKind {
    NonDivisibilityChain,
    GroupMismatch,
    NotRank2,
    GroupTooLarge,
    NotSplitting,
    FieldMismatch,
    ZeroUnit,
    NotUnit,
    BudgetExceeded,
    PreconditionViolated,
    InternalCoverFailure,
    NotPlaneElement,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonDivisibilityChain: return "NonDivisibilityChain";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotRank2: return "NotRank2";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotSplitting: return "NotSplitting";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroUnit: return "ZeroUnit";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalCoverFailure: return "InternalCoverFailure";
    case ErrorKind::NotPlaneElement: return "NotPlaneElement";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace zsum
