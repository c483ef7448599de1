#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p1split {

// Base of every error raised by the library. The CLI maps each family to an
// exit code (see tools/p1split.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input could not be read.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    // Message without the position prefix.
    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A mathematical precondition of the requested operation does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

class NotInvertibleOverLaurentRing : public DomainError {
public:
    using DomainError::DomainError;
};

// Transition matrix whose determinant is not a Laurent monomial.
class InvalidBundle : public DomainError {
public:
    using DomainError::DomainError;
};

class NotInvertible : public DomainError {
public:
    using DomainError::DomainError;
};

class NotFirstKind : public DomainError {
public:
    using DomainError::DomainError;
};

class NotFuchsian : public DomainError {
public:
    using DomainError::DomainError;
};

class ResonantExponents : public DomainError {
public:
    using DomainError::DomainError;
};

// Singular points off the rational line; exponent sums there are not supported.
class UnsupportedSingularity : public DomainError {
public:
    using DomainError::DomainError;
};

// A self-check that must always pass did not. Never expected on valid input.
class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

class InternalSearchExhausted : public ConsistencyFailure {
public:
    using ConsistencyFailure::ConsistencyFailure;
};

}  // namespace p1split
