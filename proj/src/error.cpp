#include "tpsurf/error.hpp"

namespace tpsurf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotCertifiedBasepointFree: return "NotCertifiedBasepointFree";
    case ErrorCode::HasLinearSyzygy: return "HasLinearSyzygy";
    case ErrorCode::NoQuadraticSyzygy: return "NoQuadraticSyzygy";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NonvanishingViolated: return "NonvanishingViolated";
    case ErrorCode::DenominatorZero: return "DenominatorZero";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorCode::InternalContract: return "InternalContract";
    case ErrorCode::KernelNotUnique: return "KernelNotUnique";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
  }
  return "Unknown";
}

bool is_hypothesis_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotCertifiedBasepointFree:
    case ErrorCode::HasLinearSyzygy:
    case ErrorCode::NoQuadraticSyzygy:
    case ErrorCode::DegreeTooSmall:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, std::string origin, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + " [" + origin + "]: " + message),
      code_(code),
      origin_(std::move(origin)),
      detail_(message) {}

void fail(ErrorCode code, std::string origin, const std::string& message) {
  throw Error(code, std::move(origin), message);
}

}  // namespace tpsurf
