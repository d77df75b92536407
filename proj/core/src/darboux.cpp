#include "spherix/darboux.hpp"

#include <cmath>
#include <string>

#include "spherix/error.hpp"

namespace spherix {

DarbouxData darboux(const ModifiedFrame& f, double gate, const Tolerance& tol) {
  if (!(f.kappa > tol.abs_tol)) {
    throw Error(ErrorCode::DegenerateFrame, "Darboux vector needs kappa > 0");
  }
  if (!(std::fabs(f.kappa_prime) <= gate)) {
    throw Error(ErrorCode::NonConstantCurvature,
                "|kappa'| = " + std::to_string(std::fabs(f.kappa_prime)) + " exceeds the gate");
  }
  DarbouxData d;
  d.w = f.tau * f.T + f.B;
  const double k2t2 = f.kappa * f.kappa + f.tau * f.tau;
  d.w_norm = std::sqrt(k2t2);
  d.phi = std::atan2(f.tau, f.kappa);
  // kappa' is dropped under the constant-curvature gate.
  d.phi_prime = f.tau_prime * f.kappa / k2t2;
  d.C = d.w / d.w_norm;
  return d;
}

double check_alignment_at(const CurveSpec& spec, double t, const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(eval_jet(spec, t), tol);
  const DarbouxData d = darboux(f, kConstantCurvatureGate, tol);
  const Vec3 dN = diff_vec(
      along_arclength(spec, t, [&tol](const Jet& j) { return modified_frame(j, tol).N; }), 0.0, 1,
      tol.fd_step, tol.rel_tol);
  return norm(cross(f.N, dN) - (f.kappa * f.kappa) * d.w);
}

double check_alignment(const CurveSpec& spec, double s, const Tolerance& tol) {
  return check_alignment_at(spec, at_arclength(spec, s, tol), tol);
}

RotationResidual check_rotation_at(const CurveSpec& spec, double t, const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(eval_jet(spec, t), tol);
  const DarbouxData d = darboux(f, kConstantCurvatureGate, tol);
  auto derivative_of = [&](auto member) {
    return diff_vec(
        along_arclength(spec, t, [&tol, member](const Jet& j) { return modified_frame(j, tol).*member; }),
        0.0, 1, tol.fd_step, tol.rel_tol);
  };
  return {
      norm(derivative_of(&ModifiedFrame::T) - cross(d.w, f.T)),
      norm(derivative_of(&ModifiedFrame::N) - cross(d.w, f.N)),
      norm(derivative_of(&ModifiedFrame::B) - cross(d.w, f.B)),
  };
}

RotationResidual check_rotation(const CurveSpec& spec, double s, const Tolerance& tol) {
  return check_rotation_at(spec, at_arclength(spec, s, tol), tol);
}

double lancret_deviation(const ModifiedFrame& f, const DarbouxData& d) {
  return std::max(std::fabs(std::sin(d.phi) * d.w_norm - f.tau),
                  std::fabs(std::cos(d.phi) * d.w_norm - f.kappa));
}

}  // namespace spherix
