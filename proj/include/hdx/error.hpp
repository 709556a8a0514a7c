#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Face with a repeated vertex, negative id, or wrong arity.
class InvalidFaceError : public Error {
public:
    using Error::Error;
};

class DuplicateFaceError : public Error {
public:
    using Error::Error;
};

// Argument outside the domain of an operation (probability, fatness constant,
// eigenvalue bound, chain index, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed its configured bit budget.
class CapacityError : public Error {
public:
    CapacityError(const std::string& what, int requested, int threshold)
        : Error(what + " (requires " + std::to_string(requested) +
                " bits, threshold " + std::to_string(threshold) + ")"),
          requested_(requested), threshold_(threshold) {}

    int requested() const noexcept { return requested_; }
    int threshold() const noexcept { return threshold_; }

private:
    int requested_;
    int threshold_;
};

// Normalization or a definition needs a regular graph/complex and did not get one.
class RegularityError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

// A walk tried to step from a vertex/edge without neighbors.
class UndefinedTransitionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hdx
