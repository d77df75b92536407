#include "spherix/geodesic.hpp"

#include <array>
#include <cmath>

#include "spherix/error.hpp"

namespace spherix {

GammaClosed gamma_closed(IndicatrixKind kind, const ModifiedFrame& f,
                         const std::optional<DarbouxData>& dd, const Tolerance& tol) {
  if (kind == IndicatrixKind::Tangent) {
    if (!(f.kappa > kDegenerateSpeed)) {
      throw Error(ErrorCode::DegenerateIndicatrix, "tangent indicatrix needs kappa > 0");
    }
    const double g = std::fabs(f.tau) / f.kappa;
    return {g, g};
  }
  const DarbouxData d = dd ? *dd : darboux(f, kConstantCurvatureGate, tol);
  const double k = f.kappa;
  const double k2 = k * k;
  switch (kind) {
    case IndicatrixKind::Normal: {
      const double a = d.phi_prime / (k * d.w_norm);
      const double b = (k2 - 1.0) / k;
      const double g = std::sqrt(a * a + b * b);
      return {g, g};
    }
    case IndicatrixKind::Binormal: {
      if (!(std::fabs(f.tau) > tol.abs_tol)) {
        throw Error(ErrorCode::TorsionVanishes, "binormal indicatrix needs tau != 0");
      }
      const double inv_t2 = 1.0 / (f.tau * f.tau);
      return {std::sqrt(inv_t2 + (k2 - 1.0) * (k2 - 1.0) / k2),
              std::sqrt(inv_t2 + 1.0 / k2 + k2)};
    }
    default: {
      if (!(std::fabs(d.phi_prime) > tol.abs_tol)) {
        throw Error(ErrorCode::DegenerateIndicatrix, "pole indicatrix is stationary (phi' = 0)");
      }
      const double g = d.w_norm / std::fabs(d.phi_prime);
      return {g, g};
    }
  }
}

double gamma_oracle_at(IndicatrixKind kind, const CurveSpec& spec, double t, const Tolerance& tol) {
  const Vec3 accel = cov_deriv_numeric_at(kind, spec, t, tol);
  return norm(accel + indicatrix_point_at(kind, spec, t, tol));
}

double gamma_oracle(IndicatrixKind kind, const CurveSpec& spec, double s, const Tolerance& tol) {
  return gamma_oracle_at(kind, spec, at_arclength(spec, s, tol), tol);
}

double gamma_sphere_det(std::span<const Vec3> points, double spacing, double abs_tol) {
  if (points.size() < 5 || points.size() % 2 == 0 || !(spacing > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "sphere determinant needs an odd number (>= 5) of samples and spacing > 0");
  }
  for (const Vec3& p : points) {
    if (!(std::fabs(norm(p) - 1.0) <= abs_tol)) {
      throw Error(ErrorCode::NotOnUnitSphere, "sample is not on the unit sphere");
    }
  }
  const std::size_t c = points.size() / 2;
  const Vec3& m2 = points[c - 2];
  const Vec3& m1 = points[c - 1];
  const Vec3& p0 = points[c];
  const Vec3& p1 = points[c + 1];
  const Vec3& p2 = points[c + 2];
  const Vec3 d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * spacing);
  const Vec3 d2 = (-m2 + 16.0 * m1 - 30.0 * p0 + 16.0 * p1 - p2) / (12.0 * spacing * spacing);
  const double speed = norm(d1);
  if (!(speed > kDegenerateSpeed)) {
    throw Error(ErrorCode::DegenerateIndicatrix, "sampled sphere curve is stationary");
  }
  return det3(p0, d1, d2) / (speed * speed * speed);
}

double gamma_sphere_det_at(IndicatrixKind kind, const CurveSpec& spec, double t, double spacing,
                           const Tolerance& tol) {
  const ArclengthChart chart(spec, t);
  std::array<Vec3, 5> pts;
  for (int i = 0; i < 5; ++i) {
    pts[static_cast<std::size_t>(i)] =
        indicatrix_point_at(kind, spec, chart.param_at((i - 2) * spacing), tol);
  }
  return gamma_sphere_det(pts, spacing, tol.abs_tol);
}

GeodesicReport geodesic_report_at(IndicatrixKind kind, const CurveSpec& spec, CurvePoint at,
                                  const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(eval_jet(spec, at.t), tol);
  const GammaClosed closed = gamma_closed(kind, f, std::nullopt, tol);
  GeodesicReport r;
  r.kind = kind;
  r.s = at.s;
  r.gamma_closed = closed.value;
  r.gamma_published = closed.published;
  r.gamma_oracle = gamma_oracle_at(kind, spec, at.t, tol);
  r.residual_closed = std::fabs(r.gamma_closed - r.gamma_oracle);
  r.residual_published = std::fabs(r.gamma_published - r.gamma_oracle);
  return r;
}

GeodesicReport geodesic_report(IndicatrixKind kind, const CurveSpec& spec, double s,
                               const Tolerance& tol) {
  return geodesic_report_at(kind, spec, {s, at_arclength(spec, s, tol)}, tol);
}

}  // namespace spherix
