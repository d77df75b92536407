#pragma once

#include <functional>

#include "spherix/vec3.hpp"

namespace spherix {

/// Tolerances shared by every module. All three must be strictly positive.
struct Tolerance {
  double abs_tol = 1e-9;
  double rel_tol = 1e-7;
  /// First-order finite-difference step; an order-k derivative uses
  /// fd_step^(1/k).
  double fd_step = 1e-5;

  /// Throws Error(InvalidArgument) unless every field is positive and finite.
  void validate() const;
};

using VecFunction = std::function<Vec3(double)>;
using ScalarFunction = std::function<double(double)>;

/// Central-difference derivative of order 1, 2 or 3 of `f` at `s`,
/// Richardson-extrapolated over the step pair (h, h/2) so the result is
/// fourth-order accurate. `step` is the order-1 step; higher orders widen
/// it to step^(1/order). Throws StepTooSmall when the rounding-error
/// estimate exceeds `rel_tol` relative to the result.
Vec3 diff_vec(const VecFunction& f, double s, int order, double step,
              double rel_tol = Tolerance{}.rel_tol);

/// Step actually used by diff_vec for a given derivative order.
double effective_step(int order, double step);

/// Adaptive Gauss-Kronrod quadrature of `f` over [a, b]. Throws
/// NoConvergence when the error estimate stays above `tol` (relative to the
/// L1 norm of f, floored at 1) after the maximum refinement depth.
double integrate(const ScalarFunction& f, double a, double b, double tol = 1e-12);

/// Solves g(t) = target for an increasing g on [lo, hi] by bracketing
/// (TOMS 748). The result satisfies |g(t) - target| <= abs_tol.
double invert_monotone(const ScalarFunction& g, double target, double lo, double hi,
                       double abs_tol = Tolerance{}.abs_tol);

}  // namespace spherix
