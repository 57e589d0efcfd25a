#pragma once

#include <stdexcept>
#include <string>

namespace modtrace {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shapes, negative multiplicities, mismatched rings.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Iterative numerics failed to converge or an eigenproblem stayed degenerate.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside what an operation supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Bad command line or unknown builtin name.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data that does not satisfy its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace modtrace
