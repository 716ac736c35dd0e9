#pragma once

#include <stdexcept>
#include <string>

namespace finsub {

/// Base class of all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed space file or command input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structure violates the simplicial identities or a map does not commute.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed a configured resource ceiling.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace finsub
