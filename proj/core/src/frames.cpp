#include "spherix/frames.hpp"

#include <cmath>

#include "spherix/error.hpp"

namespace spherix {

UnitSpeedJet to_unit_speed(const Jet& jet) {
  const double v = norm(jet.r1);
  const double r1r2 = dot(jet.r1, jet.r2);
  const double v_t = r1r2 / v;
  const double v_tt = (dot(jet.r2, jet.r2) + dot(jet.r1, jet.r3)) / v - r1r2 * r1r2 / (v * v * v);
  // Derivatives of the inverse map t(s).
  const double t1 = 1.0 / v;
  const double t2 = -v_t / (v * v * v);
  const double t3 = (3.0 * v_t * v_t - v_tt * v) / std::pow(v, 5);
  return {
      jet.r1 * t1,
      jet.r2 * (t1 * t1) + jet.r1 * t2,
      jet.r3 * (t1 * t1 * t1) + jet.r2 * (3.0 * t1 * t2) + jet.r1 * t3,
  };
}

double curvature(const Jet& jet) {
  const double v = norm(jet.r1);
  return norm(cross(jet.r1, jet.r2)) / (v * v * v);
}

double curvature(const UnitSpeedJet& jet) { return norm(jet.d2); }

double torsion(const Jet& jet, double kappa, const Tolerance& tol) {
  if (!(kappa > tol.abs_tol)) {
    throw Error(ErrorCode::CurvatureVanishes, "torsion is undefined where curvature vanishes");
  }
  const UnitSpeedJet u = to_unit_speed(jet);
  return det3(u.d1, u.d2, u.d3) / (kappa * kappa);
}

double torsion_general(const Jet& jet, const Tolerance& tol) {
  const Vec3 c = cross(jet.r1, jet.r2);
  const double v = norm(jet.r1);
  if (!(norm(c) / (v * v * v) > tol.abs_tol)) {
    throw Error(ErrorCode::CurvatureVanishes, "torsion is undefined where curvature vanishes");
  }
  return det3(jet.r1, jet.r2, jet.r3) / norm2(c);
}

double curvature_rate(const Jet& jet) {
  const Vec3 c = cross(jet.r1, jet.r2);
  const double cn = norm(c);
  if (cn == 0.0) return 0.0;
  const Vec3 c_t = cross(jet.r1, jet.r3);
  const double v = norm(jet.r1);
  const double v_t = dot(jet.r1, jet.r2) / v;
  const double cn_t = dot(c, c_t) / cn;
  const double kappa_t = cn_t / (v * v * v) - 3.0 * cn * v_t / (v * v * v * v);
  return kappa_t / v;
}

double torsion_rate(const Jet& jet) {
  const Vec3 c = cross(jet.r1, jet.r2);
  const double c2 = norm2(c);
  if (c2 == 0.0) return 0.0;
  const Vec3 c_t = cross(jet.r1, jet.r3);
  const double d = det3(jet.r1, jet.r2, jet.r3);
  const double d_t = det3(jet.r1, jet.r2, jet.r4);
  const double tau_t = d_t / c2 - 2.0 * d * dot(c, c_t) / (c2 * c2);
  return tau_t / norm(jet.r1);
}

FrenetFrame frenet_frame(const Jet& jet, const Tolerance& tol) {
  const UnitSpeedJet u = to_unit_speed(jet);
  const double kappa = curvature(u);
  if (!(kappa > tol.abs_tol)) {
    throw Error(ErrorCode::CurvatureVanishes, "Frenet frame is undefined where curvature vanishes");
  }
  FrenetFrame f;
  f.t = u.d1;
  f.n = u.d2 / kappa;
  f.b = cross(f.t, f.n);
  f.kappa = kappa;
  f.tau = det3(u.d1, u.d2, u.d3) / (kappa * kappa);
  return f;
}

FrenetFrame frenet_frame(const CurveSpec& spec, double s, const Tolerance& tol) {
  return frenet_frame(eval_jet(spec, at_arclength(spec, s, tol)), tol);
}

ModifiedFrame modified_frame(const Jet& jet, const Tolerance& tol) {
  const UnitSpeedJet u = to_unit_speed(jet);
  ModifiedFrame f;
  f.T = u.d1;
  f.kappa = curvature(u);
  if (!(f.kappa > tol.abs_tol)) {
    // Curvature zero: N = T' and B = T x N vanish with kappa.
    f.kappa = 0.0;
    f.curvature_zero = true;
    return f;
  }
  f.N = u.d2;
  f.B = cross(f.T, f.N);
  f.tau = det3(u.d1, u.d2, u.d3) / (f.kappa * f.kappa);
  f.kappa_prime = curvature_rate(jet);
  f.tau_prime = torsion_rate(jet);
  return f;
}

ModifiedFrame modified_frame(const CurveSpec& spec, double s, const Tolerance& tol) {
  return modified_frame(eval_jet(spec, at_arclength(spec, s, tol)), tol);
}

double metric_deviation(const ModifiedFrame& f) {
  const double k2 = f.kappa * f.kappa;
  return std::max({std::fabs(dot(f.T, f.T) - 1.0), std::fabs(dot(f.N, f.N) - k2),
                   std::fabs(dot(f.B, f.B) - k2), std::fabs(dot(f.T, f.N)),
                   std::fabs(dot(f.T, f.B)), std::fabs(dot(f.N, f.B))});
}

FrameOdeResidual check_frame_ode_at(const CurveSpec& spec, double t, const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(eval_jet(spec, t), tol);
  if (f.curvature_zero) {
    throw Error(ErrorCode::CurvatureVanishes, "frame equations need kappa > 0");
  }
  auto frame_of = [&tol](const Jet& j) { return modified_frame(j, tol); };
  const Vec3 dT = diff_vec(along_arclength(spec, t, [&](const Jet& j) { return frame_of(j).T; }),
                           0.0, 1, tol.fd_step, tol.rel_tol);
  const Vec3 dN = diff_vec(along_arclength(spec, t, [&](const Jet& j) { return frame_of(j).N; }),
                           0.0, 1, tol.fd_step, tol.rel_tol);
  const Vec3 dB = diff_vec(along_arclength(spec, t, [&](const Jet& j) { return frame_of(j).B; }),
                           0.0, 1, tol.fd_step, tol.rel_tol);
  const double k2 = f.kappa * f.kappa;
  const double log_rate = f.kappa_prime / f.kappa;
  return {
      norm(dT - f.N),
      norm(dN - (-k2 * f.T + log_rate * f.N + f.tau * f.B)),
      norm(dB - (-f.tau * f.N + log_rate * f.B)),
  };
}

FrameOdeResidual check_frame_ode(const CurveSpec& spec, double s, const Tolerance& tol) {
  return check_frame_ode_at(spec, at_arclength(spec, s, tol), tol);
}

bool is_constant_curvature(const CurveSpec& spec, double gate, const Tolerance& tol, int samples) {
  const ParamRange& r = spec.range();
  for (int i = 0; i < samples; ++i) {
    const double t = r.lo + (r.hi - r.lo) * i / std::max(samples - 1, 1);
    const Jet jet = eval_jet(spec, t);
    if (!(curvature(jet) > tol.abs_tol) || !(std::fabs(curvature_rate(jet)) <= gate)) {
      return false;
    }
  }
  return true;
}

}  // namespace spherix
