// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace orilink {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input, configuration or violated type invariant. CLI exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Runtime/numerical failure. CLI exit code 2.
struct NumericError : Error {
    using Error::Error;
};

struct DegeneratePose : NumericError {
    using NumericError::NumericError;
};

struct DegenerateGeometry : ValidationError {
    using ValidationError::ValidationError;
};

struct EmptySeries : ValidationError {
    using ValidationError::ValidationError;
};

struct DegenerateVariance : NumericError {
    using NumericError::NumericError;
};

struct DegenerateScale : NumericError {
    using NumericError::NumericError;
};

struct OutOfSupport : NumericError {
    using NumericError::NumericError;
};

struct InvalidTiming : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidConfig : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct NonMonotonicTimestamps : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace orilink
