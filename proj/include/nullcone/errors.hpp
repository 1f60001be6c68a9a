#pragma once

#include <stdexcept>
#include <string>

namespace nullcone {

/// Malformed or inconsistent input data (dimension mismatch, bad catalog
/// spec, zero vector where a nonzero one is required, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource bound was hit (Weyl orbit cap, oracle subset bound).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Never raised for validated input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace nullcone
