#ifndef MAGCAT_ERRORS_HPP
#define MAGCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magcat {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse: mismatched cutoffs, evaluating a truncated series at q = 1, ...
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Input data violates a domain axiom; the message names a witness.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A zeta matrix (or constant-term block) has no inverse.
struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

// The requested algorithm does not apply to this input
// (e.g. Neumann iteration on a non-uniform category).
struct StrategyError : Error {
    explicit StrategyError(const std::string& msg) : Error(msg) {}
};

// A configurable size guardrail was exceeded.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// Malformed input text; message carries line/field position.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace magcat

#endif
