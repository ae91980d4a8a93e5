#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extatica {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings, or an index is outside the ring.
class ContextError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// A denominator vanishes modulo the chosen prime; retry with another prime.
class BadPrimeError : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

/// The zero vector field has no foliation degree.
class DegenerateFieldError : public Error {
 public:
  using Error::Error;
};

/// A curve candidate is zero, constant, or of the wrong shape for the mode.
class InvalidDivisorError : public Error {
 public:
  using Error::Error;
};

/// Divisibility was asked against an identically zero extactic.
class VacuousQueryError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of a bound (e.g. N > h0) does not hold for the inputs.
class HypothesisNotMetError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (linear-system dimension) was exceeded.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed. Indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace extatica
