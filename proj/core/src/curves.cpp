#include "spherix/curves.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "spherix/error.hpp"

namespace spherix {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// k-th derivatives of sin(w t) and cos(w t).
double dsin(double w, double t, int k) {
  return std::pow(w, k) * std::sin(w * t + k * kPi / 2.0);
}
double dcos(double w, double t, int k) {
  return std::pow(w, k) * std::cos(w * t + k * kPi / 2.0);
}

struct SalkowskiCoefficients {
  double c;   // 1 / sqrt(1 + m^2)
  double n;   // m / sqrt(1 + m^2)
  double a1;  // (1 - n) / (4 (1 + 2n))
  double a2;  // (1 + n) / (4 (1 - 2n))
  double w1;  // 1 + 2n
  double w2;  // 1 - 2n
  double zc;  // 1 / (4m)
};

SalkowskiCoefficients salkowski_coefficients(double m) {
  const double c = 1.0 / std::sqrt(1.0 + m * m);
  const double n = m * c;
  return {c,
          n,
          (1.0 - n) / (4.0 * (1.0 + 2.0 * n)),
          (1.0 + n) / (4.0 * (1.0 - 2.0 * n)),
          1.0 + 2.0 * n,
          1.0 - 2.0 * n,
          1.0 / (4.0 * m)};
}

// k-th parameter derivative of the family position (k = 0..4).
Vec3 derivative(const CurveShape& shape, double t, int k) {
  return std::visit(
      Overloaded{
          [&](const Line&) -> Vec3 {
            return {k == 0 ? t : (k == 1 ? 1.0 : 0.0), 0.0, 0.0};
          },
          [&](const Circle& c) -> Vec3 {
            return {c.radius * dcos(1.0, t, k), c.radius * dsin(1.0, t, k), 0.0};
          },
          [&](const Helix& h) -> Vec3 {
            const double z = k == 0 ? h.b * t : (k == 1 ? h.b : 0.0);
            return {h.a * dcos(1.0, t, k), h.a * dsin(1.0, t, k), z};
          },
          [&](const TwistedCubic&) -> Vec3 {
            switch (k) {
              case 0: return {t, t * t, t * t * t};
              case 1: return {1.0, 2.0 * t, 3.0 * t * t};
              case 2: return {0.0, 2.0, 6.0 * t};
              case 3: return {0.0, 0.0, 6.0};
              default: return {};
            }
          },
          [&](const PlanarCubic&) -> Vec3 {
            switch (k) {
              case 0: return {t, t * t * t, 0.0};
              case 1: return {1.0, 3.0 * t * t, 0.0};
              case 2: return {0.0, 6.0 * t, 0.0};
              case 3: return {0.0, 6.0, 0.0};
              default: return {};
            }
          },
          [&](const Salkowski& sk) -> Vec3 {
            // Mirror image (z negated) of the standard Salkowski curve, so
            // torsion is +tan(n t) rather than -tan(n t).
            const auto q = salkowski_coefficients(sk.m);
            const double x = -q.a1 * dsin(q.w1, t, k) - q.a2 * dsin(q.w2, t, k) -
                             0.5 * dsin(1.0, t, k);
            const double y = q.a1 * dcos(q.w1, t, k) + q.a2 * dcos(q.w2, t, k) +
                             0.5 * dcos(1.0, t, k);
            const double z = -q.zc * dcos(2.0 * q.n, t, k);
            return {q.c * x, q.c * y, q.c * z};
          },
      },
      shape);
}

void check_param(const CurveSpec& spec, double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::OutOfRange, "curve parameter is not finite");
  }
  const ParamRange dom = natural_domain(spec.shape());
  if (!(t > dom.lo && t < dom.hi)) {
    throw Error(ErrorCode::OutOfRange,
                "parameter " + std::to_string(t) + " outside the regular domain of " + spec.name());
  }
}

}  // namespace

ParamRange natural_domain(const CurveShape& shape) {
  if (const auto* sk = std::get_if<Salkowski>(&shape)) {
    const double half = kPi / (2.0 * std::fabs(salkowski_coefficients(sk->m).n));
    return {-half, half};
  }
  return {-kInf, kInf};
}

ParamRange default_range(const CurveShape& shape) {
  return std::visit(
      Overloaded{
          [](const Line&) { return ParamRange{0.0, 1.0}; },
          [](const Circle&) { return ParamRange{0.0, 2.0 * kPi}; },
          [](const Helix&) { return ParamRange{0.0, 2.0 * kPi}; },
          [](const TwistedCubic&) { return ParamRange{-1.5, 1.5}; },
          [](const PlanarCubic&) { return ParamRange{-1.0, 1.0}; },
          [](const Salkowski& sk) {
            // The side of t = 0 where torsion and the Lancret angle both
            // increase with arclength.
            const double n = salkowski_coefficients(sk.m).n;
            const double half = kPi / (2.0 * std::fabs(n));
            return n > 0.0 ? ParamRange{0.1 * half, 0.8 * half}
                           : ParamRange{-0.8 * half, -0.1 * half};
          },
      },
      shape);
}

CurveSpec::CurveSpec(CurveShape shape, std::optional<ParamRange> range)
    : shape_(std::move(shape)), range_(range.value_or(default_range(shape_))) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); };
  std::visit(Overloaded{
                 [](const Line&) {},
                 [&](const Circle& c) {
                   if (!(std::isfinite(c.radius) && c.radius > 0.0)) bad("circle radius must be > 0");
                 },
                 [&](const Helix& h) {
                   if (!std::isfinite(h.a) || !std::isfinite(h.b)) bad("helix parameters must be finite");
                   if (h.a == 0.0 && h.b == 0.0) bad("helix needs (a, b) != (0, 0)");
                 },
                 [](const TwistedCubic&) {},
                 [](const PlanarCubic&) {},
                 [&](const Salkowski& sk) {
                   if (!std::isfinite(sk.m) || sk.m == 0.0) bad("salkowski m must be finite and nonzero");
                   const double n = sk.m / std::sqrt(1.0 + sk.m * sk.m);
                   if (std::fabs(std::fabs(n) - 0.5) < 1e-12) bad("salkowski m = +-1/sqrt(3) is singular");
                 },
             },
             shape_);
  if (!(std::isfinite(range_.lo) && std::isfinite(range_.hi) && range_.lo < range_.hi)) {
    bad("parameter range must satisfy t_lo < t_hi");
  }
  const ParamRange dom = natural_domain(shape_);
  if (!(range_.lo > dom.lo && range_.hi < dom.hi)) {
    bad("parameter range leaves the regular domain of the curve");
  }
}

std::string CurveSpec::name() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const Line&) { os << "line"; },
                 [&](const Circle& c) { os << "circle:" << c.radius; },
                 [&](const Helix& h) { os << "helix:" << h.a << ',' << h.b; },
                 [&](const TwistedCubic&) { os << "twistedcubic"; },
                 [&](const PlanarCubic&) { os << "planarcubic"; },
                 [&](const Salkowski& sk) { os << "salkowski:" << sk.m; },
             },
             shape_);
  return os.str();
}

Jet eval_jet(const CurveSpec& spec, double t) {
  check_param(spec, t);
  const auto& sh = spec.shape();
  return {derivative(sh, t, 0), derivative(sh, t, 1), derivative(sh, t, 2),
          derivative(sh, t, 3), derivative(sh, t, 4)};
}

Vec3 eval_velocity(const CurveSpec& spec, double t) {
  check_param(spec, t);
  return derivative(spec.shape(), t, 1);
}

double arclength(const CurveSpec& spec, double t0, double t1, double tol) {
  check_param(spec, t0);
  check_param(spec, t1);
  return integrate([&](double t) { return norm(derivative(spec.shape(), t, 1)); }, t0, t1, tol);
}

double total_length(const CurveSpec& spec) {
  return arclength(spec, spec.range().lo, spec.range().hi);
}

double at_arclength(const CurveSpec& spec, double s, const Tolerance& tol) {
  const ParamRange& r = spec.range();
  const double length = total_length(spec);
  if (!(s >= -tol.abs_tol && s <= length + tol.abs_tol)) {
    throw Error(ErrorCode::TargetOutOfRange,
                "arclength " + std::to_string(s) + " outside [0, " + std::to_string(length) + "]");
  }
  return invert_monotone([&](double t) { return arclength(spec, r.lo, t); }, s, r.lo, r.hi,
                         tol.abs_tol);
}

double ArclengthChart::param_at(double ds) const {
  if (ds == 0.0) return t0_;
  const CurveShape& sh = spec_->shape();
  auto speed = [&](double t) { return norm(derivative(sh, t, 1)); };
  check_param(*spec_, t0_);
  double t = t0_ + ds / speed(t0_);
  for (int iter = 0; iter < 50; ++iter) {
    check_param(*spec_, t);
    const double length = boost::math::quadrature::gauss<double, 20>::integrate(speed, t0_, t);
    const double step = (length - ds) / speed(t);
    t -= step;
    if (std::fabs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::fabs(t))) {
      return t;
    }
  }
  throw Error(ErrorCode::NoConvergence, "local arclength inversion did not converge");
}

}  // namespace spherix

namespace spherix {

std::vector<CurvePoint> arclength_grid(const CurveSpec& spec, int count, double s_lo, double s_hi,
                                       const Tolerance& tol) {
  if (count < 1 || !(s_lo <= s_hi)) {
    throw Error(ErrorCode::InvalidArgument, "arclength grid needs count >= 1 and s_lo <= s_hi");
  }
  std::vector<CurvePoint> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double s = count == 1 ? s_lo : s_lo + (s_hi - s_lo) * i / (count - 1);
    grid.push_back({s, at_arclength(spec, s, tol)});
  }
  return grid;
}

}  // namespace spherix
