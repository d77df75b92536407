#pragma once

#include <optional>
#include <span>

#include "spherix/indicatrix.hpp"

namespace spherix {

/// Closed-form geodesic curvature. `value` is the correct expansion;
/// `published` differs only for the binormal indicatrix, where it keeps
/// the published sqrt(1/tau^2 + 1/kappa^2 + kappa^2) (a dropped cross term;
/// the correct radicand is 1/tau^2 + (kappa^2 - 1)^2 / kappa^2).
struct GammaClosed {
  double value = 0.0;
  double published = 0.0;
};

/// gamma_T = |tau|/kappa, gamma_N = sqrt((phi'/(kappa |w|))^2 + ((kappa^2-1)/kappa)^2),
/// gamma_B as above, gamma_C = |w| / |phi'|.
GammaClosed gamma_closed(IndicatrixKind kind, const ModifiedFrame& frame,
                         const std::optional<DarbouxData>& dd = std::nullopt,
                         const Tolerance& tol = {});

/// |D_num + P| where D_num is cov_deriv_numeric and P the indicatrix point:
/// the sphere's normal term added with unit coefficient for all four kinds.
double gamma_oracle(IndicatrixKind kind, const CurveSpec& spec, double s,
                    const Tolerance& tol = {});
double gamma_oracle_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                       const Tolerance& tol = {});

/// Signed geodesic curvature det(p, p', p'') / |p'|^3 of a unit-sphere
/// curve sampled at uniform spacing; evaluated at the middle sample with
/// five-point stencils. Needs an odd number (>= 5) of samples, all within
/// abs_tol of the unit sphere, else NotOnUnitSphere / InvalidArgument.
double gamma_sphere_det(std::span<const Vec3> points, double spacing,
                        double abs_tol = Tolerance{}.abs_tol);

/// Samples the indicatrix at arclength offsets -2h..2h around parameter t
/// and applies gamma_sphere_det.
double gamma_sphere_det_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                           double spacing = 1e-3, const Tolerance& tol = {});

struct GeodesicReport {
  IndicatrixKind kind = IndicatrixKind::Tangent;
  double s = 0.0;
  double gamma_closed = 0.0;
  double gamma_published = 0.0;
  double gamma_oracle = 0.0;
  double residual_closed = 0.0;
  double residual_published = 0.0;
};

GeodesicReport geodesic_report(IndicatrixKind kind, const CurveSpec& spec, double s,
                               const Tolerance& tol = {});
GeodesicReport geodesic_report_at(IndicatrixKind kind, const CurveSpec& spec, CurvePoint at,
                                  const Tolerance& tol = {});

}  // namespace spherix
