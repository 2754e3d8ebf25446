#pragma once

#include <stdexcept>
#include <string>

namespace bosonstar {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (non-finite sample,
/// nonpositive parameter, zero field where a ratio is requested, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two fields defined on different grids were combined.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// The grid cannot represent the requested operation (e.g. a rescaling that
/// pushes most samples inside the first cell).
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A dense linear-algebra kernel failed or produced non-finite output.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace bosonstar
