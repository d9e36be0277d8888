#pragma once

#include <stdexcept>
#include <string>

namespace wschatten {

/// Raised when caller-supplied data violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure fails to produce a trustworthy result
/// (e.g. the SVD iteration does not converge within its sweep budget).
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wschatten
