#pragma once

#include <stdexcept>
#include <string>

namespace degopt {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invariant-violating input (files, graphs, tables).
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (range, validity of a certificate).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded (brute-force caps, exact tree-depth cap).
class LimitError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Fixed-width integer arithmetic would have wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace degopt
