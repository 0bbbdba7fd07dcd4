#pragma once

#include <stdexcept>
#include <string>

namespace prohecke {

// Every failure raised by the library derives from Error so that callers
// (the CLI in particular) can map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent configuration: mismatched rings, bad root datum,
// invalid extension data.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Text that could not be parsed. Carries a 1-based position.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, int line, int column)
      : ConfigError(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }
  int line_;
  int column_;
};

// An operation was called outside its domain (e.g. a non-translation passed
// where a translation is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

// v is not below w in the Bruhat order where that was required.
class OrderError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A conjugacy class was requested for an element outside Lambda(1).
class InfiniteClassError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A resource guard tripped (class size, rewriting move budget, ...).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The defect data of an extension turned out not to define a group.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Input to express_in_basis was not central.
class NotCentralError : public Error {
 public:
  using Error::Error;
};

// Integer overflow in exact coefficient arithmetic.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace prohecke
