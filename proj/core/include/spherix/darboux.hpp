#pragma once

#include <algorithm>

#include "spherix/curves.hpp"
#include "spherix/frames.hpp"

namespace spherix {

/// Largest |kappa'| treated as constant curvature.
inline constexpr double kConstantCurvatureGate = 1e-6;

/// Darboux vector w = tau T + B, its Lancret angle phi (the angle from B
/// to w, phi = atan2(tau, kappa)), d phi / ds, and the pole direction
/// C = w / |w|.
struct DarbouxData {
  Vec3 w;
  double w_norm = 0.0;
  double phi = 0.0;
  double phi_prime = 0.0;
  Vec3 C;
};

/// Valid only for constant curvature. Throws NonConstantCurvature when
/// |kappa'| > gate and DegenerateFrame when kappa <= tol.abs_tol.
DarbouxData darboux(const ModifiedFrame& frame, double gate = kConstantCurvatureGate,
                    const Tolerance& tol = {});

/// |N x N' - kappa^2 w| with N' from the finite-difference oracle.
double check_alignment(const CurveSpec& spec, double s, const Tolerance& tol = {});
double check_alignment_at(const CurveSpec& spec, double t, const Tolerance& tol = {});

struct RotationResidual {
  double tangent = 0.0;   // |T' - w x T|
  double normal = 0.0;    // |N' - w x N|
  double binormal = 0.0;  // |B' - w x B|

  [[nodiscard]] double max() const { return std::max({tangent, normal, binormal}); }
};

/// Checks that w generates the frame motion, X' = w x X, for X in {T, N, B}.
RotationResidual check_rotation(const CurveSpec& spec, double s, const Tolerance& tol = {});
RotationResidual check_rotation_at(const CurveSpec& spec, double t, const Tolerance& tol = {});

/// max(|sin(phi) |w| - tau|, |cos(phi) |w| - kappa|)
double lancret_deviation(const ModifiedFrame& frame, const DarbouxData& dd);

}  // namespace spherix
