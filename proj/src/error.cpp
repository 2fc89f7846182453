#include "paradelta/error.hpp"

namespace paradelta {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NonIntegralInterpolant: return "NonIntegralInterpolant";
    case ErrorCode::InconsistentResidues: return "InconsistentResidues";
    case ErrorCode::NotAPerfectPower: return "NotAPerfectPower";
    case ErrorCode::NotIn4cRing: return "NotIn4cRing";
    case ErrorCode::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorCode::UnsupportedPeriod: return "UnsupportedPeriod";
    case ErrorCode::PInvalidDividesK: return "PInvalidDividesK";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::PathTooCoarse: return "PathTooCoarse";
    case ErrorCode::RootOnPath: return "RootOnPath";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace paradelta
