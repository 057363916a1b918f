#pragma once

#include <stdexcept>
#include <string>

namespace grothsp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong shapes, violated preconditions, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numerical construction could not be carried out consistently
/// (for example a kernel inclusion that fails beyond tolerance).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a configured size limit (exhaustive enumeration).
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace grothsp
