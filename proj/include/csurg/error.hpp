#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace csurg {

enum class ErrorKind {
  SingularMatrix,
  DimensionMismatch,
  MissingCoefficient,
  UnexpandedCoefficient,
  NotCoprime,
  RangeError,
  Unsupported,
  NonNullhomologousDual,
  ParseError,
  ValidationError,
  InconsistentAssumptions,
  SelfTestFailure,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI exit-code mapping) can dispatch without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace csurg
