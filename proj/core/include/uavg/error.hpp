#pragma once

#include <stdexcept>
#include <string>

namespace uavg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition: ring or field mismatch,
/// malformed map, weights not summing to one, group membership failure...
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal guarantee failed to hold (e.g. a tuple that is still not
/// constant after d symmetrization passes). Never expected on valid input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace uavg
