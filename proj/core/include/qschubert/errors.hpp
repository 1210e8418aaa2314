#pragma once

#include <stdexcept>
#include <string>

namespace qschubert {

enum class ErrorKind {
  DivisionByZero,
  InvalidArgument,
  NotALaurentPolynomial,
  NotReduced,
  DegreeTooLarge,
  ZeroElement,
  NotInKernel,
  DomainViolation,
  NotInCell,
  IntegralityViolation,
  Inconsistency,
  NotSigned,
  NotCanonical,
  FrameMismatch,
  LengthNotAdditive,
  Unsupported,
  Internal
};

const char* error_kind_name(ErrorKind k);

// Every failure raised by the library. `position` carries the 1-based index
// for NotReduced and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int position = -1);

  ErrorKind kind() const noexcept { return kind_; }
  int position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  int position_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what, int position = -1);

}  // namespace qschubert
