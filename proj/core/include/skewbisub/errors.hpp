#pragma once

#include <stdexcept>
#include <string>

namespace skewbisub {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input (bad rational literal, unknown key, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A precondition on argument values was violated: arity mismatch, a point
/// outside the box, alpha outside (0,1], an empty term list, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Something that cannot happen for valid inputs (infeasible closure LP,
/// non-finite iterate). Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace skewbisub
