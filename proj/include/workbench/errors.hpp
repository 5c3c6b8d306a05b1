#pragma once

#include <stdexcept>
#include <string>

namespace wb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or bytes.
struct ParseError : Error {
    using Error::Error;
};

// Input parses but violates a structural invariant (asymmetric rotation,
// loops, parallel edges, disconnected, non-spherical embedding).
struct InvariantError : Error {
    using Error::Error;
};

// Request exceeds a desk-scale guard (cycle length, enumeration size).
struct LimitError : Error {
    using Error::Error;
};

struct NotACycleError : Error {
    using Error::Error;
};

struct NotA6CycleError : NotACycleError {
    using NotACycleError::NotACycleError;
};

struct NoOuterCycleError : Error {
    using Error::Error;
};

struct BadOuterLengthError : Error {
    using Error::Error;
};

struct IndexMismatchError : Error {
    using Error::Error;
};

// The Eq. (1) cross-check disagrees with the ledger; indicates a rule bug.
struct AuditMismatchError : Error {
    using Error::Error;
};

struct PartialColoringError : Error {
    using Error::Error;
};

struct InvalidPrecoloringError : Error {
    using Error::Error;
};

struct UncoloredError : Error {
    using Error::Error;
};

struct TooManyColoredNeighborsError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct TimeoutError : Error {
    using Error::Error;
};

}  // namespace wb
