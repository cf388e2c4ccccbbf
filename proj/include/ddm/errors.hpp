#pragma once

#include <stdexcept>
#include <string>

namespace ddm {

enum class ErrorKind {
  InvalidInput,
  WindowOutOfRange,
  NegativeCoordinate,
  GradingViolation,
  NotStochastic,
  NotIrreducible,
  BudgetExceeded,
  TooLarge,
  DimensionCap,
  UnknownName,
  GridNotMonotone,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the library. `kind()` lets callers map errors onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Resource caps (state count, enumeration size, chain length) as opposed to bad input.
  bool is_resource_cap() const noexcept {
    return kind_ == ErrorKind::BudgetExceeded || kind_ == ErrorKind::TooLarge ||
           kind_ == ErrorKind::DimensionCap;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ddm
