#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmsets {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different universes (or bases of different universes).
class CompatibilityError : public Error {
public:
    using Error::Error;
};

/// A ket is expressed in the wrong basis for the requested operation.
class BasisError : public Error {
public:
    using Error::Error;
};

/// Malformed input to a constructor or an operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An enumeration or closure would exceed its configured bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// Conditioning on the empty state.
class EmptyStateError : public Error {
public:
    using Error::Error;
};

/// A permutation set that fails the transformation-group axioms.
class InvalidGroupError : public Error {
public:
    using Error::Error;
};

/// A singular map offered as a distinction-preserving evolution.
class ProcessError : public Error {
public:
    using Error::Error;
};

/// Scenario text that does not follow the grammar.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed scenario text that references something undeclared or ill-typed.
class SemanticError : public Error {
public:
    using Error::Error;
};

}  // namespace qmsets
