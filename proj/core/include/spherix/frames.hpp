#pragma once

#include <algorithm>

#include "spherix/curves.hpp"
#include "spherix/numerics.hpp"
#include "spherix/vec3.hpp"

namespace spherix {

/// Orthonormal Frenet frame {t, n, b}.
struct FrenetFrame {
  Vec3 t;
  Vec3 n;
  Vec3 b;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Modified orthogonal frame {T, N, B} = {t, kappa n, kappa b}. N and B
/// have length kappa and vanish at curvature zeros, where `curvature_zero`
/// is set and tau, kappa_prime, tau_prime are reported as 0.
struct ModifiedFrame {
  Vec3 T;
  Vec3 N;
  Vec3 B;
  double kappa = 0.0;
  double tau = 0.0;
  double kappa_prime = 0.0;  // d kappa / ds
  double tau_prime = 0.0;    // d tau / ds
  bool curvature_zero = false;
};

/// Arclength derivatives alpha', alpha'', alpha''' of a parameter jet.
struct UnitSpeedJet {
  Vec3 d1;
  Vec3 d2;
  Vec3 d3;
};

UnitSpeedJet to_unit_speed(const Jet& jet);

/// |r1 x r2| / |r1|^3
double curvature(const Jet& jet);
/// |alpha''|
double curvature(const UnitSpeedJet& jet);

/// det(alpha', alpha'', alpha''') / kappa^2 using the unit-speed jet.
/// Throws CurvatureVanishes when kappa <= tol.abs_tol.
double torsion(const Jet& jet, double kappa, const Tolerance& tol = {});
/// det(r1, r2, r3) / |r1 x r2|^2 for an arbitrary parameter.
double torsion_general(const Jet& jet, const Tolerance& tol = {});

/// d kappa / ds from the exact jet; 0 where r1 x r2 vanishes.
double curvature_rate(const Jet& jet);
/// d tau / ds from the exact jet; 0 where r1 x r2 vanishes.
double torsion_rate(const Jet& jet);

FrenetFrame frenet_frame(const Jet& jet, const Tolerance& tol = {});
FrenetFrame frenet_frame(const CurveSpec& spec, double s, const Tolerance& tol = {});

ModifiedFrame modified_frame(const Jet& jet, const Tolerance& tol = {});
ModifiedFrame modified_frame(const CurveSpec& spec, double s, const Tolerance& tol = {});

/// Largest violation of <T,T> = 1, <N,N> = <B,B> = kappa^2 and pairwise
/// orthogonality.
double metric_deviation(const ModifiedFrame& frame);

struct FrameOdeResidual {
  double tangent = 0.0;   // |T' - N|
  double normal = 0.0;    // |N' - (-kappa^2 T + (kappa'/kappa) N + tau B)|
  double binormal = 0.0;  // |B' - (-tau N + (kappa'/kappa) B)|

  [[nodiscard]] double max() const { return std::max({tangent, normal, binormal}); }
};

/// Compares finite-difference derivatives of T, N, B along arclength with
/// the derivative matrix of the modified frame.
FrameOdeResidual check_frame_ode(const CurveSpec& spec, double s, const Tolerance& tol = {});
FrameOdeResidual check_frame_ode_at(const CurveSpec& spec, double t, const Tolerance& tol = {});

/// Wraps `fn(Jet) -> Vec3` as a function of arclength offset from parameter
/// t0, suitable for diff_vec at 0.
template <class F>
VecFunction along_arclength(const CurveSpec& spec, double t0, F fn) {
  return [chart = ArclengthChart(spec, t0), &spec, fn](double ds) {
    return fn(eval_jet(spec, chart.param_at(ds)));
  };
}

/// True when |kappa'| <= gate and kappa > abs_tol at every point of a
/// uniform parameter grid over the declared range.
bool is_constant_curvature(const CurveSpec& spec, double gate, const Tolerance& tol = {},
                           int samples = 65);

}  // namespace spherix
