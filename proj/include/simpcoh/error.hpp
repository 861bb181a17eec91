#pragma once

#include <stdexcept>
#include <string>

namespace simpcoh {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tables have the wrong length or wrong number of faces.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// A request needs simplices above the stored dimension cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A simplicial identity, group axiom or similar law fails.
class LawViolation : public Error {
public:
    using Error::Error;
};

/// Input is well formed but outside the domain of the operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A function on tuples is not eventually constant in the required sense.
class NotStabilizing : public Error {
public:
    using Error::Error;
};

/// Malformed file or command line.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace simpcoh
