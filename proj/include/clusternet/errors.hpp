#pragma once

#include <stdexcept>
#include <string>

namespace cnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: asymmetric matrix, bad literal, mismatched label sets.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Unknown label or metric id.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Several incomparable minimal candidates where a unique one was required.
class AmbiguityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The finite p-adic precision window cannot decide the answer.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnet
