#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spherix {

enum class ErrorCode {
  InvalidArgument,
  StepTooSmall,
  NoConvergence,
  TargetOutOfRange,
  NotMonotone,
  OutOfRange,
  CurvatureVanishes,
  NonConstantCurvature,
  DegenerateFrame,
  DegenerateIndicatrix,
  TorsionVanishes,
  NotOnUnitSphere,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Every failing public
/// operation in the library throws this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spherix
