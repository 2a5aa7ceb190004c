#pragma once

#include <stdexcept>
#include <string>

namespace cohomo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A subgroup that was required to contain another one does not.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// A structure failed its construction-time validation (group law,
/// module action, equivariance, exactness, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A cochain that must be a cocycle is not.
class NotCocycleError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A dense cochain table would exceed the configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohomo
