#pragma once

#include <stdexcept>
#include <string>

namespace bordcalc {

// Root of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on the mathematical input failed (non-invertible series,
// odd projective index, malformed partition, ...).
struct DomainError : Error {
    using Error::Error;
};

// Two graded objects were combined with incompatible dimensions.
struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

// An operation was asked for in a dimension it is not defined in
// (e.g. omega coordinates outside dimensions 4 and 8).
struct UnsupportedDimension : DomainError {
    using DomainError::DomainError;
};

// Parse failure for textual value formats such as "num/den".
struct FormatError : Error {
    using Error::Error;
};

}  // namespace bordcalc
