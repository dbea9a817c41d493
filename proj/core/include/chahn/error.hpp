#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chahn {

enum class ErrorCode {
  PoleAtNonpositiveInteger,
  RangeOverflow,
  ArgumentTooLarge,
  NonPositiveRealPart,
  DegeneratePochhammer,
  CancellationLoss,
  OracleBoundExceeded,
  PoleHit,
  TooCloseToOrigin,
  DomainError,
  BranchCutHit,
  WrongRegion,
  WrongClass,
  NonPositiveOffdiagonal,
  NoConvergence,
  NoSignChange,
  QuadratureNotConverged,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type; the code is stable and
// is what the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chahn
