#include "spherix/error.hpp"

namespace spherix {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::StepTooSmall: return "StepTooSmall";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CurvatureVanishes: return "CurvatureVanishes";
    case ErrorCode::NonConstantCurvature: return "NonConstantCurvature";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::DegenerateIndicatrix: return "DegenerateIndicatrix";
    case ErrorCode::TorsionVanishes: return "TorsionVanishes";
    case ErrorCode::NotOnUnitSphere: return "NotOnUnitSphere";
  }
  return "Unknown";
}

}  // namespace spherix
