#pragma once

#include <stdexcept>
#include <string>

namespace equisym {

/// Bad input from the caller: malformed partition text, size mismatches,
/// invalid morphism data. Maps to CLI exit code 1.
class UserError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request that would exceed the configured tensor-size budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graded series was asked for a degree beyond its truncation.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity failed (e.g. a non-integral coefficient where the
/// theory guarantees an integer). Never expected to fire.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace equisym
