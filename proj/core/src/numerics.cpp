#include "spherix/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "spherix/error.hpp"

namespace spherix {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// One central-difference estimate with step h. `fmax` collects the largest
// component magnitude seen, for the rounding-error bound.
Vec3 central(const VecFunction& f, double s, int order, double h, double& fmax) {
  auto eval = [&](double x) {
    Vec3 v = f(x);
    if (!is_finite(v)) {
      throw Error(ErrorCode::InvalidArgument,
                  "function returned a non-finite value at " + std::to_string(x));
    }
    fmax = std::max(fmax, max_abs(v));
    return v;
  };
  switch (order) {
    case 1:
      return (eval(s + h) - eval(s - h)) / (2.0 * h);
    case 2:
      return (eval(s + h) - 2.0 * eval(s) + eval(s - h)) / (h * h);
    default:
      return (eval(s + 2.0 * h) - 2.0 * eval(s + h) + 2.0 * eval(s - h) -
              eval(s - 2.0 * h)) /
             (2.0 * h * h * h);
  }
}

}  // namespace

void Tolerance::validate() const {
  if (!positive_finite(abs_tol) || !positive_finite(rel_tol) || !positive_finite(fd_step)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive and finite");
  }
}

double effective_step(int order, double step) {
  return order == 1 ? step : std::pow(step, 1.0 / order);
}

Vec3 diff_vec(const VecFunction& f, double s, int order, double step, double rel_tol) {
  if (order < 1 || order > 3) {
    throw Error(ErrorCode::InvalidArgument, "derivative order must be 1, 2 or 3");
  }
  if (!positive_finite(step) || !positive_finite(rel_tol)) {
    throw Error(ErrorCode::InvalidArgument, "step and rel_tol must be positive");
  }
  const double h = effective_step(order, step);
  double fmax = 0.0;
  const Vec3 coarse = central(f, s, order, h, fmax);
  const Vec3 fine = central(f, s, order, 0.5 * h, fmax);
  const Vec3 result = (4.0 * fine - coarse) / 3.0;

  // Sum of stencil weight magnitudes is 2, 4, 6 for orders 1..3 (times
  // 1/(2h), 1/h^2, 1/(2h^3)); the fine stencil dominates.
  const double hf = 0.5 * h;
  const double weight = order == 1 ? 1.0 / hf : order == 2 ? 4.0 / (hf * hf) : 3.0 / (hf * hf * hf);
  const double rounding = (5.0 / 3.0) * kEps * fmax * weight;
  if (rounding > rel_tol * std::max(max_abs(result), 1.0)) {
    throw Error(ErrorCode::StepTooSmall,
                "rounding error estimate " + std::to_string(rounding) + " exceeds budget");
  }
  return result;
}

double integrate(const ScalarFunction& f, double a, double b, double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !positive_finite(tol)) {
    throw Error(ErrorCode::InvalidArgument, "integration bounds must be finite");
  }
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, 30, tol, &error, &l1);
  if (!std::isfinite(value) || !(error <= tol * std::max(1.0, l1))) {
    throw Error(ErrorCode::NoConvergence,
                "quadrature error estimate " + std::to_string(error) + " above tolerance");
  }
  return value;
}

double invert_monotone(const ScalarFunction& g, double target, double lo, double hi,
                       double abs_tol) {
  if (!(lo < hi) || !std::isfinite(target) || !positive_finite(abs_tol)) {
    throw Error(ErrorCode::InvalidArgument, "invert_monotone needs lo < hi and finite target");
  }
  const double glo = g(lo);
  const double ghi = g(hi);
  if (!(glo < ghi)) {
    throw Error(ErrorCode::NotMonotone, "g(lo) >= g(hi)");
  }
  if (target < glo - abs_tol || target > ghi + abs_tol) {
    throw Error(ErrorCode::TargetOutOfRange,
                "target " + std::to_string(target) + " outside [" + std::to_string(glo) +
                    ", " + std::to_string(ghi) + "]");
  }
  if (target <= glo) return lo;
  if (target >= ghi) return hi;

  auto residual = [&](double t) { return g(t) - target; };
  std::uintmax_t max_iter = 200;
  double t = 0.0;
  try {
    const auto [a, b] = boost::math::tools::toms748_solve(
        residual, lo, hi, glo - target, ghi - target,
        boost::math::tools::eps_tolerance<double>(), max_iter);
    t = 0.5 * (a + b);
  } catch (const boost::math::evaluation_error& e) {
    throw Error(ErrorCode::NotMonotone, e.what());
  }
  if (!(std::fabs(residual(t)) <= abs_tol)) {
    throw Error(ErrorCode::NotMonotone, "bracketing did not reach the target");
  }
  return t;
}

}  // namespace spherix
