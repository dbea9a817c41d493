#include "chahn/error.hpp"

namespace chahn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PoleAtNonpositiveInteger: return "PoleAtNonpositiveInteger";
    case ErrorCode::RangeOverflow: return "RangeOverflow";
    case ErrorCode::ArgumentTooLarge: return "ArgumentTooLarge";
    case ErrorCode::NonPositiveRealPart: return "NonPositiveRealPart";
    case ErrorCode::DegeneratePochhammer: return "DegeneratePochhammer";
    case ErrorCode::CancellationLoss: return "CancellationLoss";
    case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::TooCloseToOrigin: return "TooCloseToOrigin";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::BranchCutHit: return "BranchCutHit";
    case ErrorCode::WrongRegion: return "WrongRegion";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::NonPositiveOffdiagonal: return "NonPositiveOffdiagonal";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
  }
  return "Unknown";
}

}  // namespace chahn
