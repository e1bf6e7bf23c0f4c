#pragma once

#include <stdexcept>
#include <string>

namespace coalition {

/// Invalid graph construction (out-of-range id, self-loop).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6, edge-list or partition text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive search refused because the input exceeds the configured size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructive step that must succeed did not. Indicates a bug or a
/// counterexample to the argument the construction relies on.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace coalition
