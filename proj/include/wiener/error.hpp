#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wiener {

// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTree : public Error {
 public:
  using Error::Error;
};

class InvalidArrangement : public Error {
 public:
  using Error::Error;
};

class InvalidMultiset : public Error {
 public:
  using Error::Error;
};

class InvalidDegreeSequence : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured size limit (brute force, exact arithmetic).
class SizeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wiener
