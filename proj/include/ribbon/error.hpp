#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input (bad JSON, wrong field types).
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class ValidationKind { kLoop, kDisconnected, kRotationMismatch, kDuplicateId };

const char* to_string(ValidationKind kind);

/// Well-formed input that violates a ribbon graph invariant.
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, const std::string& detail)
      : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ValidationKind kind() const { return kind_; }

 private:
  ValidationKind kind_;
};

class MissingVertex : public Error {
 public:
  using Error::Error;
};

class MissingEdge : public Error {
 public:
  using Error::Error;
};

class NotIncident : public Error {
 public:
  using Error::Error;
};

class EdgeInTree : public Error {
 public:
  using Error::Error;
};

class NotASpanningTree : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a degree-g class has zero or several break representatives.
/// Reaching this means an implementation bug, never bad input.
class UniquenessViolation : public Error {
 public:
  using Error::Error;
};

class NotBreakDivisor : public Error {
 public:
  using Error::Error;
};

class ChipAtSink : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class NotPlanar : public Error {
 public:
  using Error::Error;
};

class HasBridge : public Error {
 public:
  using Error::Error;
};

class NotSimple : public Error {
 public:
  using Error::Error;
};

}  // namespace ribbon
