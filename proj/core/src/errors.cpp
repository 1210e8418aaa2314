#include "qschubert/errors.hpp"

namespace qschubert {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotALaurentPolynomial: return "NotALaurentPolynomial";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NotInCell: return "NotInCell";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::Inconsistency: return "Inconsistency";
    case ErrorKind::NotSigned: return "NotSigned";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::LengthNotAdditive: return "LengthNotAdditive";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, int position)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
      kind_(kind),
      position_(position) {}

void raise(ErrorKind kind, const std::string& what, int position) {
  throw Error(kind, what, position);
}

}  // namespace qschubert
