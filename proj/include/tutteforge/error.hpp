#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tutteforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Referenced a vertex or edge id that is not in the graph.
struct InvalidReferenceError : Error {
    using Error::Error;
};

// Terminal list lengths (or cycle/orbit lengths) disagree.
struct ArityError : Error {
    using Error::Error;
};

// Input exceeds a configured size limit (oracle edge limit, iso vertex limit).
struct LimitError : Error {
    using Error::Error;
};

// An enumeration would exceed its work budget (subset / partition checks).
struct BudgetError : Error {
    using Error::Error;
};

// Caller violated a documented precondition (e.g. disconnected input).
struct PreconditionError : Error {
    using Error::Error;
};

// A construction's hypothesis failed verification (orbit / reflection checks).
struct HypothesisError : Error {
    using Error::Error;
};

// The claimed 2-cut does not separate the given side.
struct InvalidCutError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace tutteforge
