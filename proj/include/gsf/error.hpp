#pragma once

#include <stdexcept>
#include <string>

namespace gsf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad descriptors, JSON, out-of-range arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A vanishing Plücker coordinate made a solution formula undefined.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The local elimination behind a reduction step was singular.
class ReductionError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of attempts.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// An internal combinatorial invariant was violated. Indicates a bug, not bad input.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsf
