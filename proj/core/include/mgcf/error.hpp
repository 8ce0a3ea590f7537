#pragma once

#include <stdexcept>
#include <string>

namespace mgcf {

// Base class for all library errors. CLI exit-code mapping:
// FormatError/DimensionError -> 2 (bad data), InternalError -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or missing input data: unreadable files, ragged rows,
// unparseable tokens, schema violations, invariant-breaking datasets.
class FormatError : public Error {
public:
    using Error::Error;
};

// Mismatched lengths, spans, or indices between otherwise valid objects.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A condition the library guarantees cannot happen unless its own
// invariants are broken.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace mgcf
