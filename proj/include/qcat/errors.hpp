#pragma once

#include <stdexcept>

namespace qcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Matrix/vector sizes that do not match the object count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnknownObjectError : public Error {
 public:
  using Error::Error;
};

/// Operands living over different categories or bases.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Input that fails its own axioms where a valid one is required.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Enumeration request beyond the configured size bound.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

/// Target space lacks representatives needed by an extension.
class IncompleteTargetError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcat
