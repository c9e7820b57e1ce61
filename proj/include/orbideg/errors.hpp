#pragma once

#include <stdexcept>
#include <string>

namespace orbideg {

enum class ErrorKind {
  InvalidInput,
  NotEffective,
  NotEquivariant,
  WeightMismatch,
  NotRegular,
  EnumerationCapExceeded,
  NonIntegralWeight,
  PreconditionViolated,
  NewtonDiverged,
  IrregularPoint,
  CriticalValue,
  NoConvergence,
  NoHomomorphism,
  Overflow,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// command-line front end can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbideg
