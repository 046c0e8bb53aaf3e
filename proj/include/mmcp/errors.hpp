#pragma once

#include <stdexcept>

namespace mmcp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible matrix/tensor shapes or invalid dimensions.
struct ShapeError : Error { using Error::Error; };

// Dense tensor would exceed the configured entry cap.
struct SizeCapError : Error { using Error::Error; };

// Transform matrix is (numerically) singular.
struct SingularTransformError : Error { using Error::Error; };

// An operation's stated precondition does not hold.
struct PreconditionError : Error { using Error::Error; };

// Malformed file or string input.
struct ParseError : Error { using Error::Error; };

} // namespace mmcp
