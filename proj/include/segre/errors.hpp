#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segre {

/// A documented precondition of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live in different ambients or coefficient domains.
class DomainMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Random choices kept failing to be general enough (retry cap reached).
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity is inconsistent with the theory (inexact division,
/// class outside the diagonal image, ...). Usually a violated assumption.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace segre
