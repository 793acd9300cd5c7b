#pragma once

#include <stdexcept>
#include <string>

namespace vortex {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A problem instance or argument violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// The requested computation exists only for a narrower family (e.g. rank 2).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// The formal data does not determine the requested object.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

/// A self-check on computed data failed. Signals a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace vortex
