#pragma once

#include <stdexcept>
#include <string>

namespace im4 {

// Base class for all domain-condition violations. CLI maps these to exit 3.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct OnProjectiveHorizon : DomainError {
    using DomainError::DomainError;
};

struct OutOfDomain : DomainError {
    using DomainError::DomainError;
};

struct NotPerfectSquare : DomainError {
    using DomainError::DomainError;
};

struct DenominatorZero : DomainError {
    using DomainError::DomainError;
};

struct ChartBoundary : DomainError {
    using DomainError::DomainError;
};

struct NotNilpotent : DomainError {
    using DomainError::DomainError;
};

struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace im4
