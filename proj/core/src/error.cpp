#include "hmlift/error.hpp"

namespace hmlift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::NotPolynomial: return "not-polynomial";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Singular: return "singular-point";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::SamplingFailure: return "sampling-failure";
    case ErrorKind::UnknownId: return "unknown-id";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + message), kind_(kind) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorKind::Parse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace hmlift
