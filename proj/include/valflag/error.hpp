#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valflag {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vector or matrix sizes disagree.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation (negative homogenizing
/// coordinate, non-continuous prime where a continuous one is required, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Arithmetic would exceed the configured number of distinct radicals.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A defining matrix whose first column is lexicographically negative.
class InvalidMatrix : public Error {
public:
  using Error::Error;
};

/// A search exceeded its iteration cap; reported instead of looping.
class SearchExhausted : public Error {
public:
  using Error::Error;
};

/// Text input that does not conform to one of the grammars.
class ParseError : public Error {
public:
  ParseError(const std::string& reason, std::size_t line, std::size_t column)
      : Error(reason + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        reason_(reason), line_(line), column_(column) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace valflag
