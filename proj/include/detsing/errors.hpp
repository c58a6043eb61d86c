#pragma once

#include <stdexcept>
#include <string>

namespace detsing {

enum class ErrorKind {
  Parse,
  InvalidType,
  NotDeterminantal,
  NotZeroDimensional,
  NotIsolated,
  NotIsolatedCriticalLocus,
  ResourceLimit,
  DegenerateAfterRetries,
  HypothesisViolation,
  UnknownVariable,
  ZeroPolynomial,
  WrongDimension,
  IndexOutOfRange,
  RingMismatch,
  Inconclusive,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` lets callers
// (notably the CLI) map failures onto stable exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace detsing
