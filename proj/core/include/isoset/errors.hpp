#pragma once

#include <stdexcept>
#include <string>

namespace isoset {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: universe mismatch, elements out of range, non-square matrices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the admissible range of a construction or search.
class RangeError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size cap (dimension, universe, vertex count) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the input does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace isoset
