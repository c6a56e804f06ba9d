#pragma once

#include <stdexcept>
#include <string>

namespace acats {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure is malformed: dangling references, missing table entries,
/// inconsistent shapes. Raised while building values, never by checks.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments outside its domain
/// (non-parallel arrows, mismatched spaces, bad endpoints).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold (structure not separated,
/// not 0-categoric, composability hypothesis fails). The message
/// carries the offending quantity.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A word-length truncation bound was too small for the requested result.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A document failed to parse or violates the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace acats
