#pragma once

#include <stdexcept>
#include <string>

namespace pfs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational function was built with (or divided by) zero.
class ZeroDivisionError : public Error {
public:
    using Error::Error;
};

/// Evaluation or a limit hit a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// An integer parameter is outside the range where an operation is defined.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An operation that needs an even dimension got an odd one.
class ParityError : public Error {
public:
    using Error::Error;
};

/// A structured input violates its stated invariants.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Text that does not parse as a Laurent polynomial or rational function.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace pfs
