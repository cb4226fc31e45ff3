#pragma once

#include <stdexcept>
#include <string>

namespace hermispec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a graph invariant (loop, conflicting pair, bad endpoint).
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A precondition on a family parameter or argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical method hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An internal exactness check failed. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermispec
