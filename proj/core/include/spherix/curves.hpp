#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spherix/numerics.hpp"
#include "spherix/vec3.hpp"

namespace spherix {

/// (t, 0, 0)
struct Line {};
/// (r cos t, r sin t, 0)
struct Circle {
  double radius = 1.0;
};
/// (a cos t, a sin t, b t); curvature a/(a^2+b^2), torsion b/(a^2+b^2).
struct Helix {
  double a = 2.0;
  double b = 1.0;
};
/// (t, t^2, t^3)
struct TwistedCubic {};
/// (t, t^3, 0); curvature vanishes at t = 0.
struct PlanarCubic {};
/// Constant-curvature (kappa = 1) curve with torsion tan(n t),
/// n = m / sqrt(1 + m^2). Regular for |t| < pi / (2|n|).
struct Salkowski {
  double m = 1.0;
};

using CurveShape = std::variant<Line, Circle, Helix, TwistedCubic, PlanarCubic, Salkowski>;

struct ParamRange {
  double lo = 0.0;
  double hi = 1.0;
};

/// An analytic curve family, its parameters, and the parameter interval
/// that arclength is measured over (s = 0 at range().lo).
class CurveSpec {
 public:
  /// Throws Error(InvalidArgument) if the parameters or range are invalid.
  explicit CurveSpec(CurveShape shape, std::optional<ParamRange> range = std::nullopt);

  [[nodiscard]] const CurveShape& shape() const noexcept { return shape_; }
  [[nodiscard]] const ParamRange& range() const noexcept { return range_; }

  /// Command-line style name, e.g. "helix:2,1".
  [[nodiscard]] std::string name() const;

 private:
  CurveShape shape_;
  ParamRange range_;
};

/// Position and first four derivatives with respect to the curve parameter.
struct Jet {
  Vec3 r;
  Vec3 r1;
  Vec3 r2;
  Vec3 r3;
  Vec3 r4;
};

/// Interval on which the family is defined and regular. Unbounded families
/// report +-infinity.
ParamRange natural_domain(const CurveShape& shape);
ParamRange default_range(const CurveShape& shape);

/// Exact derivatives of the family at parameter t. Throws OutOfRange when t
/// is outside natural_domain (sample stencils may step past range()).
Jet eval_jet(const CurveSpec& spec, double t);

/// Exact first derivative only.
Vec3 eval_velocity(const CurveSpec& spec, double t);

/// Length of the curve between parameters t0 and t1 (signed by orientation).
double arclength(const CurveSpec& spec, double t0, double t1, double tol = 1e-12);

/// Length of the whole declared range.
double total_length(const CurveSpec& spec);

/// Parameter t whose arclength from range().lo equals s.
/// Throws TargetOutOfRange if s is outside [0, total_length].
double at_arclength(const CurveSpec& spec, double s, const Tolerance& tol = {});

/// Local unit-speed chart around a base parameter: maps an arclength
/// offset ds to the parameter t with arclength(t0, t) = ds, to full
/// double precision. Finite-difference oracles differentiate along this.
class ArclengthChart {
 public:
  ArclengthChart(const CurveSpec& spec, double t0) : spec_(&spec), t0_(t0) {}

  [[nodiscard]] double param_at(double ds) const;
  [[nodiscard]] double base() const noexcept { return t0_; }

 private:
  const CurveSpec* spec_;
  double t0_;
};

}  // namespace spherix

namespace spherix {

/// A sample location: arclength from range().lo and the matching parameter.
struct CurvePoint {
  double s = 0.0;
  double t = 0.0;
};

/// `count` points uniformly spaced in arclength over [s_lo, s_hi].
std::vector<CurvePoint> arclength_grid(const CurveSpec& spec, int count, double s_lo, double s_hi,
                                       const Tolerance& tol = {});

}  // namespace spherix
