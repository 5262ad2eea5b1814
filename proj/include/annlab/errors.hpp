#pragma once

#include <stdexcept>
#include <string>

namespace annlab {

/// Raised when an input violates a documented precondition or schema.
struct schema_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a requested computation exceeds a desk-scale enumeration guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an iterative numerical procedure fails to reach its tolerance.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace annlab
