#pragma once

#include <stdexcept>
#include <string>

namespace bracekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad tables, out-of-range indices, exceeded order caps.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis required by an operation or construction does not hold.
/// The message names the violated hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own axioms. Always an internal bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace bracekit
