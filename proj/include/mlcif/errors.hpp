#pragma once

#include <stdexcept>
#include <string>

namespace mlcif {

/// Mismatched or out-of-range call parameters (wrong k, n, index, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input outside the operation's mathematical domain (e.g. a set with no index
/// passed where one is required).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A condition that a verified theorem guarantees can never occur did occur.
/// Thrown with a concrete counterexample; any occurrence is a release blocker.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Request exceeds a documented resource ceiling. Fail loudly, never truncate.
struct ScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlcif
