#pragma once

#include <optional>
#include <string_view>

#include "spherix/curves.hpp"
#include "spherix/darboux.hpp"
#include "spherix/frames.hpp"

namespace spherix {

/// The spherical curve traced by T, N, B or the pole direction C.
enum class IndicatrixKind { Tangent, Normal, Binormal, Pole };

std::string_view to_string(IndicatrixKind kind) noexcept;
std::optional<IndicatrixKind> parse_indicatrix_kind(std::string_view name) noexcept;

/// Indicatrix speeds at or below this are flagged degenerate.
inline constexpr double kDegenerateSpeed = 1e-8;

struct IndicatrixSample {
  IndicatrixKind kind = IndicatrixKind::Tangent;
  double s = 0.0;
  Vec3 point;
  double speed = 0.0;  // d s_X / d s
  Vec3 unit_tangent;   // zero when degenerate
  Vec3 cov_deriv;      // closed form; zero when degenerate
  bool degenerate = false;
};

// The closed-form operations below take the Darboux data optionally: the
// normal, binormal and pole kinds need it and compute it from `frame`
// (which applies the constant-curvature gate) when it is not supplied.

/// T, N, B or C. N and B keep length kappa.
Vec3 indicatrix_point(IndicatrixKind kind, const ModifiedFrame& frame,
                      const std::optional<DarbouxData>& dd = std::nullopt);

/// kappa, kappa |w|, kappa |tau|, |phi'|.
double indicatrix_speed(IndicatrixKind kind, const ModifiedFrame& frame,
                        const std::optional<DarbouxData>& dd = std::nullopt);

/// Unit tangent: N/kappa, -cos(phi) T + sin(phi)/kappa B, -N/kappa,
/// cos(phi) T - sin(phi)/kappa B. The binormal and pole forms keep their
/// fixed orientation even where tau or phi' is negative.
Vec3 indicatrix_tangent(IndicatrixKind kind, const ModifiedFrame& frame,
                        const std::optional<DarbouxData>& dd = std::nullopt);

/// Closed-form derivative of the unit tangent with respect to the
/// indicatrix arclength (the ambient covariant derivative).
Vec3 cov_deriv_closed(IndicatrixKind kind, const ModifiedFrame& frame,
                      const std::optional<DarbouxData>& dd = std::nullopt,
                      const Tolerance& tol = {});

/// Oracle: differentiates the indicatrix point map along the base curve by
/// finite differences and returns (P'' - <P'', u> u) / |P'|^2 with
/// u = P'/|P'|. Uses no closed-form tangent or acceleration.
Vec3 cov_deriv_numeric(IndicatrixKind kind, const CurveSpec& spec, double s,
                       const Tolerance& tol = {});
Vec3 cov_deriv_numeric_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                          const Tolerance& tol = {});

/// Oracle unit tangent P'/|P'|.
Vec3 tangent_numeric_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                        const Tolerance& tol = {});

/// Indicatrix point as a function of the curve parameter.
Vec3 indicatrix_point_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                         const Tolerance& tol = {});

/// Point, speed, tangent and closed-form covariant derivative; degenerate
/// samples are flagged instead of throwing.
IndicatrixSample indicatrix_sample(IndicatrixKind kind, const CurveSpec& spec, double s,
                                   const Tolerance& tol = {});
IndicatrixSample indicatrix_sample_at(IndicatrixKind kind, const CurveSpec& spec, CurvePoint at,
                                      const Tolerance& tol = {});

}  // namespace spherix
