#pragma once

#include <stdexcept>
#include <string>

namespace iwc {

/// Bad user input: unknown type string, inadmissible rank, bad subset.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation exceeded a configured size bound.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A self-check failed. Always a bug, never a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace iwc
