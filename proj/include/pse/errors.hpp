#pragma once

#include <stdexcept>
#include <string>

namespace pse {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structure, graph or config violates one of its invariants.
struct ValidationError : Error {
    using Error::Error;
};

/// Malformed input text (structure JSON, edge list, CLI arguments).
struct ParseError : Error {
    using Error::Error;
};

/// An operation was called outside its precondition.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace pse
