#pragma once

#include <stdexcept>
#include <string>

namespace tfac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated mathematical precondition (bad parameter, evaluation outside the
// operation's domain).
struct DomainError : Error {
    using Error::Error;
};
struct PastExtinction : DomainError {
    using DomainError::DomainError;
};
struct OutOfRange : DomainError {
    using DomainError::DomainError;
};
struct OriginSingularity : DomainError {
    using DomainError::DomainError;
};
struct UnderResolved : DomainError {
    using DomainError::DomainError;
};
struct StepSizeTooLarge : DomainError {
    using DomainError::DomainError;
};

// Runtime numeric failure.
struct NumericError : Error {
    using Error::Error;
};
struct NonConvergence : NumericError {
    using NumericError::NumericError;
};
struct BlowUp : NumericError {
    using NumericError::NumericError;
};
struct DegenerateFit : NumericError {
    using NumericError::NumericError;
};
struct LinearSolveFailure : NumericError {
    using NumericError::NumericError;
};

// Command-line layer.
struct UsageError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace tfac
