#pragma once

#include <stdexcept>
#include <string>

namespace rmhull {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Attempt to invert a rank-deficient matrix; carries the rank that was found.
struct SingularError : Error {
    int rank_found;
    SingularError(const std::string& msg, int rank) : Error(msg), rank_found(rank) {}
};

/// A hull target that the block construction cannot reach for this field size.
struct InadmissibleTargetError : Error {
    using Error::Error;
};

/// No diagonal block of the requested size exists (q in {2,3} with s = 1).
struct NoConstructionError : Error {
    using Error::Error;
};

/// Requested object provably does not exist (wrong field/degree parity).
struct ParityError : Error {
    using Error::Error;
};

/// A seeded search exhausted its trial budget; distinct from nonexistence.
struct BudgetError : Error {
    using Error::Error;
};

/// Violated internal invariant. Indicates a bug, not a usage error.
struct InternalError : Error {
    using Error::Error;
};

/// Malformed input document; the message names the offending field.
struct ParseError : Error {
    using Error::Error;
};

} // namespace rmhull
