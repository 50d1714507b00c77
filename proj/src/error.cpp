#include "csurg/error.hpp"

namespace csurg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MissingCoefficient: return "MissingCoefficient";
    case ErrorKind::UnexpandedCoefficient: return "UnexpandedCoefficient";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NonNullhomologousDual: return "NonNullhomologousDual";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InconsistentAssumptions: return "InconsistentAssumptions";
    case ErrorKind::SelfTestFailure: return "SelfTestFailure";
  }
  return "Unknown";
}

}  // namespace csurg
