#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hmlift {

enum class ErrorKind {
  DivisionByZero,
  Dimension,
  Consistency,
  Shape,
  InvariantViolation,
  NotPolynomial,
  Parse,
  Singular,
  Domain,
  InternalConsistency,
  SamplingFailure,
  UnknownId,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// CLI exit-status logic) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hmlift
