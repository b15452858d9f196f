#pragma once

#include <stdexcept>
#include <string>

namespace tss {

// Base of everything the library throws. The CLI maps all of these to exit 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or an instance that violates a structural invariant.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A structural invariant of a value object was violated (bad graph, bad seed).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The instance is well-formed but outside the algorithm's domain
// (non-majority thresholds for the twin-cover solver, non-uniform type thresholds).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A size guard or a parameter limit was exceeded. Not a malformed input.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace tss
