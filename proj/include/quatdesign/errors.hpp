#pragma once

#include <stdexcept>
#include <string>

namespace quatdesign {

/// Base class of every error thrown by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two irrational quadratic fields were mixed in one operation.
struct field_mismatch : error {
    using error::error;
};

/// An operation was called outside its domain (non-unit input, x0 not in X, ...).
struct precondition_error : error {
    using error::error;
};

/// A cyclic or dihedral group whose coordinates leave the supported fields.
struct unsupported_angle : error {
    using error::error;
};

/// Two independent derivations of the same object disagree.
struct integrity_error : error {
    using error::error;
};

/// A configured resource budget would be exceeded.
struct resource_error : error {
    using error::error;
};

/// A fixed-width accumulator overflowed; callers retry with big integers.
struct arithmetic_overflow : error {
    using error::error;
};

}  // namespace quatdesign
