#include "spherix/involute.hpp"

#include <cmath>

#include "spherix/error.hpp"

namespace spherix {

namespace {

IndicatrixKind first_kind(InvolutePair pair) {
  switch (pair) {
    case InvolutePair::TangentPole: return IndicatrixKind::Tangent;
    case InvolutePair::BinormalPole: return IndicatrixKind::Binormal;
    case InvolutePair::NormalPole: return IndicatrixKind::Normal;
  }
  return IndicatrixKind::Tangent;
}

}  // namespace

std::string_view to_string(InvolutePair pair) noexcept {
  switch (pair) {
    case InvolutePair::TangentPole: return "T_vs_C";
    case InvolutePair::BinormalPole: return "B_vs_C";
    case InvolutePair::NormalPole: return "N_vs_C";
  }
  return "unknown";
}

Vec3 indicatrix_velocity(IndicatrixKind kind, const ModifiedFrame& f,
                         const std::optional<DarbouxData>& dd) {
  if (kind == IndicatrixKind::Tangent) return f.N;
  const DarbouxData d = dd ? *dd : darboux(f);
  switch (kind) {
    case IndicatrixKind::Normal: return -(f.kappa * f.kappa) * f.T + f.tau * f.B;
    // The binormal moves along N.
    case IndicatrixKind::Binormal: return -f.tau * f.N;
    default:
      return d.phi_prime * (std::cos(d.phi) * f.T - (std::sin(d.phi) / f.kappa) * f.B);
  }
}

double involute_inner(InvolutePair pair, const ModifiedFrame& f,
                      const std::optional<DarbouxData>& dd) {
  const DarbouxData d = dd ? *dd : darboux(f);
  return dot(indicatrix_velocity(first_kind(pair), f, d),
             indicatrix_velocity(IndicatrixKind::Pole, f, d));
}

double involute_inner(InvolutePair pair, const CurveSpec& spec, double s, const Tolerance& tol) {
  const ModifiedFrame f = modified_frame(spec, s, tol);
  return involute_inner(pair, f, darboux(f, kConstantCurvatureGate, tol));
}

double involute_cosine(InvolutePair pair, const ModifiedFrame& f,
                       const std::optional<DarbouxData>& dd) {
  const DarbouxData d = dd ? *dd : darboux(f);
  const Vec3 pole_direction = std::cos(d.phi) * f.T - (std::sin(d.phi) / f.kappa) * f.B;
  return dot(indicatrix_tangent(first_kind(pair), f, d), pole_direction);
}

InvoluteReport involute_scan(InvolutePair pair, const CurveSpec& spec, int n_samples,
                             const Tolerance& tol) {
  if (n_samples < 3) {
    throw Error(ErrorCode::InvalidArgument, "involute scan needs at least 3 samples");
  }
  InvoluteReport report;
  report.pair = pair;
  bool stationary_pole = true;
  for (const CurvePoint& p : arclength_grid(spec, n_samples, 0.0, total_length(spec), tol)) {
    const ModifiedFrame f = modified_frame(eval_jet(spec, p.t), tol);
    const DarbouxData d = darboux(f, kConstantCurvatureGate, tol);
    InvoluteSample sample;
    sample.s = p.s;
    sample.inner_product = involute_inner(pair, f, d);
    try {
      sample.unit_cosine = involute_cosine(pair, f, d);
    } catch (const Error& e) {
      // Binormal tangent undefined where tau = 0; the velocity product still is.
      if (e.code() != ErrorCode::DegenerateIndicatrix) throw;
      sample.unit_cosine = 0.0;
    }
    report.max_abs_inner = std::max(report.max_abs_inner, std::fabs(sample.inner_product));
    stationary_pole = stationary_pole && std::fabs(d.phi_prime) <= tol.abs_tol;
    report.samples.push_back(sample);
  }
  report.is_involute = report.max_abs_inner <= tol.abs_tol;
  std::string note = "constant curvature verified at every sample";
  if (stationary_pole) {
    note += "; phi' = 0 throughout (helix), pole indicatrix is a single point";
  } else if (pair == InvolutePair::NormalPole) {
    note += "; phi' != 0, so the helix hypothesis fails";
  }
  report.precondition_note = std::move(note);
  return report;
}

}  // namespace spherix
