#pragma once

#include <stdexcept>
#include <string>

namespace diffelim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different variable registries.
class RegistryMismatch : public Error {
 public:
  RegistryMismatch() : Error("polynomials belong to different variable registries") {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a computation exceeds one of the configured resource cutoffs
/// (pair count, coefficient size, wall time). Callers report this as an
/// inconclusive outcome, never as a verdict.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematically guaranteed property failed to hold at run time.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace diffelim
