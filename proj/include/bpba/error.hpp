#pragma once

#include <stdexcept>
#include <string>

namespace bpba {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Non-conformable matrix/vector shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A rational function was evaluated at one of its poles (includes x/0).
class PoleError : public Error {
public:
    using Error::Error;
};

/// A lattice specification that fails validation was used for computation.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Parameters are valid but land on a degenerate point, e.g. a vanishing
/// reference component in a partition-function ratio.
class DegenerateError : public Error {
public:
    using Error::Error;
};

} // namespace bpba
