#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown names, bad files, schema violations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A construction produced an object that fails its own postcondition.
/// Seeing one of these means there is a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ladder
