#pragma once

#include <stdexcept>
#include <string>

namespace hikf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatches, non-finite coordinates, bad config values.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A function evaluated outside its mathematical domain (e.g. log kernel at r = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Cholesky pivot <= 0 on a matrix that was expected to be SPD.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// A filter invariant was violated beyond round-off (e.g. negative posterior variance).
class NumericalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hikf
