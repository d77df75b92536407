#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spherix/indicatrix.hpp"

namespace spherix {

/// Indicatrix compared against the pole indicatrix.
enum class InvolutePair { TangentPole, BinormalPole, NormalPole };

std::string_view to_string(InvolutePair pair) noexcept;

/// Velocity of the indicatrix with respect to the base-curve arclength:
/// N, -kappa^2 T + tau B, -tau N, phi' (cos(phi) T - sin(phi)/kappa B).
/// Requires the constant-curvature gate for every kind but the tangent.
Vec3 indicatrix_velocity(IndicatrixKind kind, const ModifiedFrame& frame,
                         const std::optional<DarbouxData>& dd = std::nullopt);

/// Inner product of the two indicatrix velocities. It vanishes wherever
/// the first indicatrix is a spherical involute of the pole indicatrix;
/// for the normal pair it equals -phi' kappa |w|.
double involute_inner(InvolutePair pair, const ModifiedFrame& frame,
                      const std::optional<DarbouxData>& dd = std::nullopt);
double involute_inner(InvolutePair pair, const CurveSpec& spec, double s,
                      const Tolerance& tol = {});

/// Cosine between the unit tangent of the first indicatrix and the unit
/// pole direction cos(phi) T - sin(phi)/kappa B, which stays defined
/// when phi' = 0. Zero for the tangent and binormal pairs, -1 for the
/// normal pair.
double involute_cosine(InvolutePair pair, const ModifiedFrame& frame,
                       const std::optional<DarbouxData>& dd = std::nullopt);

struct InvoluteSample {
  double s = 0.0;
  double inner_product = 0.0;
  double unit_cosine = 0.0;
};

struct InvoluteReport {
  InvolutePair pair = InvolutePair::TangentPole;
  std::vector<InvoluteSample> samples;
  double max_abs_inner = 0.0;
  bool is_involute = false;
  std::string precondition_note;
};

/// Evaluates the pair on `n_samples` (>= 3) points uniformly spaced over the
/// whole arclength; is_involute iff every |inner product| <= abs_tol.
InvoluteReport involute_scan(InvolutePair pair, const CurveSpec& spec, int n_samples,
                             const Tolerance& tol = {});

}  // namespace spherix
