#include "spherix/indicatrix.hpp"

#include <cmath>

#include "spherix/error.hpp"

namespace spherix {

namespace {

DarbouxData need_darboux(const ModifiedFrame& frame, const std::optional<DarbouxData>& dd,
                         const Tolerance& tol = {}) {
  return dd ? *dd : darboux(frame, kConstantCurvatureGate, tol);
}

bool needs_darboux(IndicatrixKind kind) { return kind != IndicatrixKind::Tangent; }

void require_speed(double speed) {
  if (!(speed > kDegenerateSpeed)) {
    throw Error(ErrorCode::DegenerateIndicatrix, "indicatrix speed " + std::to_string(speed) +
                                                     " is below the degeneracy threshold");
  }
}

}  // namespace

std::string_view to_string(IndicatrixKind kind) noexcept {
  switch (kind) {
    case IndicatrixKind::Tangent: return "tangent";
    case IndicatrixKind::Normal: return "normal";
    case IndicatrixKind::Binormal: return "binormal";
    case IndicatrixKind::Pole: return "pole";
  }
  return "unknown";
}

std::optional<IndicatrixKind> parse_indicatrix_kind(std::string_view name) noexcept {
  if (name == "tangent") return IndicatrixKind::Tangent;
  if (name == "normal") return IndicatrixKind::Normal;
  if (name == "binormal") return IndicatrixKind::Binormal;
  if (name == "pole") return IndicatrixKind::Pole;
  return std::nullopt;
}

Vec3 indicatrix_point(IndicatrixKind kind, const ModifiedFrame& f,
                      const std::optional<DarbouxData>& dd) {
  switch (kind) {
    case IndicatrixKind::Tangent: return f.T;
    case IndicatrixKind::Normal: need_darboux(f, dd); return f.N;
    case IndicatrixKind::Binormal: need_darboux(f, dd); return f.B;
    case IndicatrixKind::Pole: return need_darboux(f, dd).C;
  }
  return {};
}

double indicatrix_speed(IndicatrixKind kind, const ModifiedFrame& f,
                        const std::optional<DarbouxData>& dd) {
  if (kind == IndicatrixKind::Tangent) return f.kappa;
  const DarbouxData d = need_darboux(f, dd);
  switch (kind) {
    case IndicatrixKind::Normal: return f.kappa * d.w_norm;
    case IndicatrixKind::Binormal: return f.kappa * std::fabs(f.tau);
    default: return std::fabs(d.phi_prime);
  }
}

Vec3 indicatrix_tangent(IndicatrixKind kind, const ModifiedFrame& f,
                        const std::optional<DarbouxData>& dd) {
  require_speed(indicatrix_speed(kind, f, dd));
  if (kind == IndicatrixKind::Tangent) return f.N / f.kappa;
  const DarbouxData d = need_darboux(f, dd);
  const double c = std::cos(d.phi);
  const double s = std::sin(d.phi);
  switch (kind) {
    case IndicatrixKind::Normal: return -c * f.T + (s / f.kappa) * f.B;
    case IndicatrixKind::Binormal: return -f.N / f.kappa;
    default: return c * f.T - (s / f.kappa) * f.B;
  }
}

Vec3 cov_deriv_closed(IndicatrixKind kind, const ModifiedFrame& f,
                      const std::optional<DarbouxData>& dd, const Tolerance& tol) {
  const double k2 = f.kappa * f.kappa;
  if (kind == IndicatrixKind::Tangent) {
    // Holds for varying curvature as well.
    require_speed(f.kappa);
    return -f.T + (f.tau / k2) * f.B;
  }
  const DarbouxData d = need_darboux(f, dd, tol);
  const double c = std::cos(d.phi);
  const double s = std::sin(d.phi);
  switch (kind) {
    case IndicatrixKind::Normal:
      require_speed(f.kappa * d.w_norm);
      return (d.phi_prime / (k2 * d.w_norm)) * (f.kappa * s * f.T + c * f.B) - f.N / k2;
    case IndicatrixKind::Binormal:
      if (!(std::fabs(f.tau) > tol.abs_tol)) {
        throw Error(ErrorCode::TorsionVanishes, "binormal indicatrix needs tau != 0");
      }
      require_speed(f.kappa * std::fabs(f.tau));
      return f.T / f.tau - f.B / k2;
    default:
      if (!(std::fabs(d.phi_prime) > tol.abs_tol)) {
        throw Error(ErrorCode::DegenerateIndicatrix, "pole indicatrix is stationary (phi' = 0)");
      }
      return -s * f.T - (c / f.kappa) * f.B + (d.w_norm / (d.phi_prime * f.kappa)) * f.N;
  }
}

Vec3 indicatrix_point_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                         const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(eval_jet(spec, t), tol);
  std::optional<DarbouxData> dd;
  if (needs_darboux(kind)) dd = darboux(f, kConstantCurvatureGate, tol);
  return indicatrix_point(kind, f, dd);
}

namespace {

struct PointDerivatives {
  Vec3 first;
  Vec3 second;
};

PointDerivatives point_derivatives(IndicatrixKind kind, const CurveSpec& spec, double t,
                                   const Tolerance& tol, bool with_second) {
  // Same admissibility as the closed forms, so both sides fail alike.
  const ModifiedFrame f = modified_frame(eval_jet(spec, t), tol);
  std::optional<DarbouxData> dd;
  if (needs_darboux(kind)) dd = darboux(f, kConstantCurvatureGate, tol);
  if (kind == IndicatrixKind::Binormal && !(std::fabs(f.tau) > tol.abs_tol)) {
    throw Error(ErrorCode::TorsionVanishes, "binormal indicatrix needs tau != 0");
  }
  if (kind == IndicatrixKind::Pole && !(std::fabs(dd->phi_prime) > tol.abs_tol)) {
    throw Error(ErrorCode::DegenerateIndicatrix, "pole indicatrix is stationary (phi' = 0)");
  }

  const VecFunction point = along_arclength(spec, t, [kind, &tol](const Jet& j) {
    const ModifiedFrame g = modified_frame(j, tol);
    std::optional<DarbouxData> gd;
    if (kind != IndicatrixKind::Tangent) gd = darboux(g, kConstantCurvatureGate, tol);
    return indicatrix_point(kind, g, gd);
  });
  PointDerivatives out;
  out.first = diff_vec(point, 0.0, 1, tol.fd_step, tol.rel_tol);
  require_speed(norm(out.first));
  if (with_second) out.second = diff_vec(point, 0.0, 2, tol.fd_step, tol.rel_tol);
  return out;
}

}  // namespace

Vec3 tangent_numeric_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                        const Tolerance& tol) {
  const Vec3 p1 = point_derivatives(kind, spec, t, tol, false).first;
  return p1 / norm(p1);
}

Vec3 cov_deriv_numeric_at(IndicatrixKind kind, const CurveSpec& spec, double t,
                          const Tolerance& tol) {
  const auto [p1, p2] = point_derivatives(kind, spec, t, tol, true);
  const double speed = norm(p1);
  const Vec3 u = p1 / speed;
  return (p2 - dot(p2, u) * u) / (speed * speed);
}

Vec3 cov_deriv_numeric(IndicatrixKind kind, const CurveSpec& spec, double s,
                       const Tolerance& tol) {
  return cov_deriv_numeric_at(kind, spec, at_arclength(spec, s, tol), tol);
}

IndicatrixSample indicatrix_sample_at(IndicatrixKind kind, const CurveSpec& spec, CurvePoint at,
                                      const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(eval_jet(spec, at.t), tol);
  std::optional<DarbouxData> dd;
  if (needs_darboux(kind)) dd = darboux(f, kConstantCurvatureGate, tol);

  IndicatrixSample out;
  out.kind = kind;
  out.s = at.s;
  out.point = indicatrix_point(kind, f, dd);
  out.speed = indicatrix_speed(kind, f, dd);
  try {
    out.unit_tangent = indicatrix_tangent(kind, f, dd);
    out.cov_deriv = cov_deriv_closed(kind, f, dd, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateIndicatrix && e.code() != ErrorCode::TorsionVanishes) {
      throw;
    }
    out.unit_tangent = {};
    out.cov_deriv = {};
    out.degenerate = true;
  }
  return out;
}

IndicatrixSample indicatrix_sample(IndicatrixKind kind, const CurveSpec& spec, double s,
                                   const Tolerance& tol) {
  return indicatrix_sample_at(kind, spec, {s, at_arclength(spec, s, tol)}, tol);
}

}  // namespace spherix
