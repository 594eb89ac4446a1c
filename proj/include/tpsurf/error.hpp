#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpsurf {

enum class ErrorCode {
  // arithmetic
  DivisionByZero,
  NotDivisible,
  FieldMismatch,
  // linear algebra
  NonSquare,
  // input
  InvalidInput,
  ParseError,
  // hypotheses of the quadratic-syzygy setting
  NotCertifiedBasepointFree,
  HasLinearSyzygy,
  NoQuadraticSyzygy,
  DegreeTooSmall,
  // internal consistency
  NonvanishingViolated,
  DenominatorZero,
  NotSquare,
  ZeroDeterminant,
  InternalContract,
  // oracles
  KernelNotUnique,
  GenerationExhausted,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for the codes that reject an input because it falls outside the
/// supported setting (as opposed to a bug or malformed input).
bool is_hypothesis_failure(ErrorCode code) noexcept;

/// Every error raised by the library carries the operation it came from,
/// written as "<module>::<operation>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string origin, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& origin() const noexcept { return origin_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string origin_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, std::string origin, const std::string& message);

}  // namespace tpsurf
