#include "spherix/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "spherix/darboux.hpp"
#include "spherix/error.hpp"
#include "spherix/frames.hpp"
#include "spherix/geodesic.hpp"
#include "spherix/indicatrix.hpp"
#include "spherix/involute.hpp"

namespace spherix {

namespace {

// PlanarCubic samples this close to t = 0 are kept out of identities that
// need a Frenet frame.
constexpr double kZeroExclusion = 1e-3;

struct CurveContext {
  const CurveSpec& spec;
  const Tolerance& tol;
  std::vector<CurvePoint> grid;
  std::vector<ModifiedFrame> frames;
  std::vector<std::optional<DarbouxData>> darboux;
  bool constant_kappa = false;
  bool unit_kappa = false;
  bool planar_cubic = false;

  [[nodiscard]] bool frenet_ok(std::size_t i) const {
    if (!(frames[i].kappa > tol.abs_tol)) return false;
    return !(planar_cubic && std::fabs(grid[i].t) < kZeroExclusion);
  }
  [[nodiscard]] bool torsion_ok(std::size_t i) const {
    return darboux[i] && std::fabs(frames[i].tau) > tol.abs_tol &&
           frames[i].kappa * std::fabs(frames[i].tau) > kDegenerateSpeed;
  }
  [[nodiscard]] bool pole_moves(std::size_t i) const {
    return darboux[i] && std::fabs(darboux[i]->phi_prime) > tol.abs_tol;
  }
};

struct Accum {
  double max = 0.0;
  std::size_t count = 0;
  std::string note;

  void add(double residual) {
    // NaN must register as a failure.
    max = std::isnan(residual) || std::isnan(max) ? std::nan("") : std::max(max, residual);
    ++count;
  }
};

using IdentityFn = std::function<Accum(const CurveContext&)>;

double vec_gap(const Vec3& a, const Vec3& b) { return norm(a - b); }

template <class Pred, class Fn>
Accum over(const CurveContext& c, Pred keep, Fn residual) {
  Accum acc;
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    if (keep(i)) acc.add(residual(i));
  }
  return acc;
}

auto all_samples() {
  return [](std::size_t) { return true; };
}

Accum frame_ode(const CurveContext& c) {
  return over(c, [&](std::size_t i) { return c.frenet_ok(i); },
              [&](std::size_t i) { return check_frame_ode_at(c.spec, c.grid[i].t, c.tol).max(); });
}

Accum metric(const CurveContext& c) {
  Accum acc = over(c, all_samples(), [&](std::size_t i) { return metric_deviation(c.frames[i]); });
  if (c.planar_cubic) {
    acc.add(metric_deviation(modified_frame(eval_jet(c.spec, 0.0), c.tol)));
  }
  return acc;
}

Accum curvature_zero(const CurveContext& c) {
  Accum acc;
  if (!c.planar_cubic) return acc;
  const ModifiedFrame at_zero = modified_frame(eval_jet(c.spec, 0.0), c.tol);
  acc.add(std::max(norm(at_zero.N), norm(at_zero.B)));
  // |N|^2 and |B|^2 approach kappa^2 -> 0 from both sides.
  for (double delta : {1e-2, 1e-3, 1e-4, 1e-5}) {
    for (double t : {-delta, delta}) {
      const Jet j = eval_jet(c.spec, t);
      const ModifiedFrame f = modified_frame(j, c.tol);
      const double k2 = curvature(j) * curvature(j);
      acc.add(std::max(std::fabs(norm2(f.N) - k2), std::fabs(norm2(f.B) - k2)));
    }
  }
  acc.note = "N = B = 0 at the curvature zero";
  return acc;
}

Accum frame_coincidence(const CurveContext& c) {
  if (!c.unit_kappa) return {};
  return over(c, all_samples(), [&](std::size_t i) {
    const FrenetFrame fr = frenet_frame(eval_jet(c.spec, c.grid[i].t), c.tol);
    const ModifiedFrame& m = c.frames[i];
    return std::max({max_abs(m.T - fr.t), max_abs(m.N - fr.n), max_abs(m.B - fr.b)});
  });
}

Accum curvature_routes(const CurveContext& c) {
  return over(c, [&](std::size_t i) { return c.frames[i].kappa > 1e-6; }, [&](std::size_t i) {
    const Jet j = eval_jet(c.spec, c.grid[i].t);
    return std::fabs(curvature(j) - curvature(to_unit_speed(j))) / std::max(1.0, curvature(j));
  });
}

Accum torsion_routes(const CurveContext& c) {
  return over(c, [&](std::size_t i) { return c.frames[i].kappa > 1e-6; }, [&](std::size_t i) {
    const Jet j = eval_jet(c.spec, c.grid[i].t);
    const double unit = torsion(j, c.frames[i].kappa, c.tol);
    return std::fabs(unit - torsion_general(j, c.tol)) / std::max(1.0, std::fabs(unit));
  });
}

template <class Fn>
Accum on_constant(const CurveContext& c, Fn residual) {
  if (!c.constant_kappa) return {};
  return over(c, [&](std::size_t i) { return c.darboux[i].has_value(); }, residual);
}

Accum darboux_rotation(const CurveContext& c) {
  return on_constant(c, [&](std::size_t i) { return check_rotation_at(c.spec, c.grid[i].t, c.tol).max(); });
}

Accum darboux_alignment(const CurveContext& c) {
  return on_constant(c, [&](std::size_t i) { return check_alignment_at(c.spec, c.grid[i].t, c.tol); });
}

Accum lancret(const CurveContext& c) {
  return on_constant(c, [&](std::size_t i) {
    const ModifiedFrame& f = c.frames[i];
    const DarbouxData& d = *c.darboux[i];
    const double tan_gap = std::fabs(std::tan(d.phi) - f.tau / f.kappa) / std::max(1.0, std::fabs(f.tau / f.kappa));
    const double norm_gap = std::fabs(d.w_norm - norm(d.w));
    return std::max({lancret_deviation(f, d), tan_gap, norm_gap});
  });
}

Accum pole_direction(const CurveContext& c) {
  return on_constant(c, [&](std::size_t i) {
    const DarbouxData& d = *c.darboux[i];
    return std::max(std::fabs(norm(d.C) - 1.0), std::fabs(dot(d.C, c.frames[i].N)));
  });
}

// Closed-form tangent against the finite-difference tangent of the point map.
template <class Pred>
Accum tangent_identity(const CurveContext& c, IndicatrixKind kind, Pred keep) {
  return over(c, keep, [&, kind](std::size_t i) {
    return vec_gap(indicatrix_tangent(kind, c.frames[i], c.darboux[i]),
                   tangent_numeric_at(kind, c.spec, c.grid[i].t, c.tol));
  });
}

template <class Pred>
Accum accel_identity(const CurveContext& c, IndicatrixKind kind, Pred keep) {
  return over(c, keep, [&, kind](std::size_t i) {
    return vec_gap(cov_deriv_closed(kind, c.frames[i], c.darboux[i], c.tol),
                   cov_deriv_numeric_at(kind, c.spec, c.grid[i].t, c.tol));
  });
}

template <class Pred>
Accum gamma_identity(const CurveContext& c, IndicatrixKind kind, Pred keep, bool literal = false) {
  return over(c, keep, [&, kind, literal](std::size_t i) {
    const GammaClosed g = gamma_closed(kind, c.frames[i], c.darboux[i], c.tol);
    const double oracle = gamma_oracle_at(kind, c.spec, c.grid[i].t, c.tol);
    return std::fabs((literal ? g.published : g.value) - oracle);
  });
}

auto constant_and(const CurveContext& c, std::function<bool(std::size_t)> extra) {
  return [&c, extra](std::size_t i) { return c.constant_kappa && c.darboux[i] && extra(i); };
}

Accum involute_identity(const CurveContext& c, InvolutePair pair) {
  return on_constant(c, [&](std::size_t i) {
    return std::fabs(involute_inner(pair, c.frames[i], c.darboux[i]));
  });
}

Accum involute_normal(const CurveContext& c) {
  if (!c.constant_kappa) return {};
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    if (c.pole_moves(i)) return {};
  }
  Accum acc = involute_identity(c, InvolutePair::NormalPole);
  acc.note = "phi' = 0 at every sample";
  return acc;
}

Accum normal_pole_product(const CurveContext& c) {
  if (!c.constant_kappa) return {};
  Accum acc;
  double largest = 0.0;
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    if (!c.pole_moves(i)) continue;
    const ModifiedFrame& f = c.frames[i];
    const DarbouxData& d = *c.darboux[i];
    const double inner = involute_inner(InvolutePair::NormalPole, f, d);
    largest = std::max(largest, std::fabs(inner));
    acc.add(std::fabs(inner + d.phi_prime * f.kappa * d.w_norm));
  }
  if (acc.count > 0) {
    acc.note = "normal indicatrix is not an involute here; max |inner product| = " +
               std::to_string(largest);
  }
  return acc;
}

struct Identity {
  IdentityInfo info;
  IdentityFn fn;
  bool discrepancy_expected = false;
};

const std::vector<Identity>& registry() {
  using K = IndicatrixKind;
  static const std::vector<Identity> all = {
      {{"frame-ode", "derivative matrix of the modified frame vs finite differences", 1e-5}, frame_ode},
      {{"metric-relations", "<T,T> = 1, <N,N> = <B,B> = kappa^2, pairwise orthogonal", 1e-9}, metric},
      {{"curvature-zero", "N = B = 0 at a curvature zero and |N|^2, |B|^2 -> kappa^2", 1e-9}, curvature_zero},
      {{"frame-coincidence", "modified frame equals Frenet frame when kappa = 1", 1e-9}, frame_coincidence},
      {{"curvature-routes", "unit-speed and general-parameter curvature agree", 1e-7}, curvature_routes},
      {{"torsion-routes", "unit-speed and general-parameter torsion agree", 1e-7}, torsion_routes},
      {{"darboux-rotation", "T' = w x T, N' = w x N, B' = w x B", 1e-5}, darboux_rotation},
      {{"darboux-alignment", "N x N' = kappa^2 w", 1e-5}, darboux_alignment},
      {{"lancret-angle", "tau = |w| sin(phi), kappa = |w| cos(phi), tan(phi) = tau/kappa", 1e-9}, lancret},
      {{"pole-direction", "|C| = 1 and <C, N> = 0", 1e-9}, pole_direction},
      {{"tangent-indicatrix-tangent", "T_T = N / kappa", 1e-6},
       [](const CurveContext& c) { return tangent_identity(c, K::Tangent, [&](std::size_t i) { return c.frenet_ok(i); }); }},
      {{"tangent-indicatrix-accel", "D T_T = -T + (tau / kappa^2) B", 1e-5},
       [](const CurveContext& c) { return accel_identity(c, K::Tangent, [&](std::size_t i) { return c.frenet_ok(i); }); }},
      {{"normal-indicatrix-tangent", "T_N = -cos(phi) T + sin(phi)/kappa B", 1e-6},
       [](const CurveContext& c) { return tangent_identity(c, K::Normal, constant_and(c, [](std::size_t) { return true; })); }},
      {{"normal-indicatrix-accel", "D T_N = phi'/(kappa^2 |w|) (kappa sin(phi) T + cos(phi) B) - N/kappa^2", 1e-5},
       [](const CurveContext& c) { return accel_identity(c, K::Normal, constant_and(c, [](std::size_t) { return true; })); }},
      {{"binormal-indicatrix-tangent", "T_B = -N / kappa", 1e-6},
       [](const CurveContext& c) { return tangent_identity(c, K::Binormal, constant_and(c, [&](std::size_t i) { return c.torsion_ok(i); })); }},
      {{"binormal-indicatrix-accel", "D T_B = T / tau - B / kappa^2", 1e-5},
       [](const CurveContext& c) { return accel_identity(c, K::Binormal, constant_and(c, [&](std::size_t i) { return c.torsion_ok(i); })); }},
      {{"pole-indicatrix-tangent", "T_C = cos(phi) T - sin(phi)/kappa B", 1e-6},
       [](const CurveContext& c) { return tangent_identity(c, K::Pole, constant_and(c, [&](std::size_t i) { return c.pole_moves(i); })); }},
      {{"pole-indicatrix-accel", "D T_C = -sin(phi) T - cos(phi)/kappa B + |w|/(phi' kappa) N", 1e-5},
       [](const CurveContext& c) { return accel_identity(c, K::Pole, constant_and(c, [&](std::size_t i) { return c.pole_moves(i); })); }},
      {{"gamma-tangent", "gamma_T = |tau| / kappa vs oracle", 1e-5},
       [](const CurveContext& c) { return gamma_identity(c, K::Tangent, [&](std::size_t i) { return c.frenet_ok(i); }); }},
      {{"gamma-normal", "gamma_N = sqrt((phi'/(kappa |w|))^2 + ((kappa^2 - 1)/kappa)^2) vs oracle", 1e-5},
       [](const CurveContext& c) { return gamma_identity(c, K::Normal, constant_and(c, [](std::size_t) { return true; })); }},
      {{"gamma-binormal", "gamma_B = sqrt(1/tau^2 + (kappa^2 - 1)^2 / kappa^2) vs oracle", 1e-5},
       [](const CurveContext& c) { return gamma_identity(c, K::Binormal, constant_and(c, [&](std::size_t i) { return c.torsion_ok(i); })); }},
      {{"gamma-binormal-literal", "published gamma_B = sqrt(|w|^2/(kappa^2 tau^2) + kappa^2) vs oracle", 1e-5},
       [](const CurveContext& c) {
         Accum a = gamma_identity(c, K::Binormal, constant_and(c, [&](std::size_t i) { return c.torsion_ok(i); }), true);
         if (a.count > 0) a.note = "published expansion drops a cross term (radicand off by 2)";
         return a;
       },
       true},
      {{"gamma-pole", "gamma_C = |w| / |phi'| vs oracle", 1e-5},
       [](const CurveContext& c) { return gamma_identity(c, K::Pole, constant_and(c, [&](std::size_t i) { return c.pole_moves(i); })); }},
      {{"gamma-tangent-tan-phi", "gamma_T = |tan(phi)| on constant curvature", 1e-9},
       [](const CurveContext& c) {
         return on_constant(c, [&](std::size_t i) {
           const double g = gamma_closed(K::Tangent, c.frames[i], c.darboux[i], c.tol).value;
           return std::fabs(g - std::fabs(std::tan(c.darboux[i]->phi)));
         });
       }},
      {{"gamma-pole-product", "gamma_C |phi'| = |w|", 1e-5},
       [](const CurveContext& c) {
         return over(c, constant_and(c, [&](std::size_t i) { return c.pole_moves(i); }), [&](std::size_t i) {
           const DarbouxData& d = *c.darboux[i];
           const double g = gamma_closed(K::Pole, c.frames[i], d, c.tol).value;
           return std::fabs(g * std::fabs(d.phi_prime) - d.w_norm);
         });
       }},
      {{"sphere-det-tangent", "|det(p, p', p'')| / |p'|^3 vs oracle on the tangent indicatrix", 1e-5},
       [](const CurveContext& c) {
         return over(c, [&](std::size_t i) { return c.frenet_ok(i); }, [&](std::size_t i) {
           return std::fabs(std::fabs(gamma_sphere_det_at(K::Tangent, c.spec, c.grid[i].t, 1e-3, c.tol)) -
                            gamma_oracle_at(K::Tangent, c.spec, c.grid[i].t, c.tol));
         });
       }},
      {{"sphere-det-pole", "|det(p, p', p'')| / |p'|^3 vs oracle on the pole indicatrix", 1e-5},
       [](const CurveContext& c) {
         return over(c, constant_and(c, [&](std::size_t i) { return c.pole_moves(i); }), [&](std::size_t i) {
           return std::fabs(std::fabs(gamma_sphere_det_at(K::Pole, c.spec, c.grid[i].t, 1e-3, c.tol)) -
                            gamma_oracle_at(K::Pole, c.spec, c.grid[i].t, c.tol));
         });
       }},
      {{"involute-tangent-pole", "<T indicatrix velocity, C indicatrix velocity> = 0", 1e-9},
       [](const CurveContext& c) { return involute_identity(c, InvolutePair::TangentPole); }},
      {{"involute-binormal-pole", "<B indicatrix velocity, C indicatrix velocity> = 0", 1e-9},
       [](const CurveContext& c) { return involute_identity(c, InvolutePair::BinormalPole); }},
      {{"involute-normal-pole", "<N indicatrix velocity, C indicatrix velocity> = 0 when phi' = 0", 1e-9},
       involute_normal},
      {{"normal-pole-inner-product", "<N velocity, C velocity> = -phi' kappa |w| when phi' != 0", 1e-9},
       normal_pole_product},
  };
  return all;
}

CurveContext make_context(const CurveSpec& spec, int samples, const Tolerance& tol) {
  CurveContext c{spec, tol, {}, {}, {}};
  c.grid = arclength_grid(spec, samples, 0.0, total_length(spec), tol);
  c.planar_cubic = std::holds_alternative<PlanarCubic>(spec.shape());
  c.constant_kappa = is_constant_curvature(spec, kConstantCurvatureGate, tol);
  c.unit_kappa = c.constant_kappa;
  for (const CurvePoint& p : c.grid) {
    const ModifiedFrame f = modified_frame(eval_jet(spec, p.t), tol);
    c.unit_kappa = c.unit_kappa && std::fabs(f.kappa - 1.0) <= tol.abs_tol;
    std::optional<DarbouxData> d;
    if (c.constant_kappa) d = darboux(f, kConstantCurvatureGate, tol);
    c.frames.push_back(f);
    c.darboux.push_back(d);
  }
  return c;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::ExpectedDiscrepancy: return "expected-discrepancy";
  }
  return "unknown";
}

bool ValidationReport::passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const ReportEntry& e) { return e.verdict == Verdict::Fail; });
}

const std::vector<IdentityInfo>& identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const Identity& id : registry()) out.push_back(id.info);
    return out;
  }();
  return infos;
}

bool is_known_identity(std::string_view id) {
  const auto& all = identities();
  return std::any_of(all.begin(), all.end(), [&](const IdentityInfo& i) { return i.id == id; });
}

std::vector<CurveSpec> default_validation_curves() {
  return {
      CurveSpec(Line{}),         CurveSpec(Circle{1.0}),   CurveSpec(Circle{2.0}),
      CurveSpec(Helix{2.0, 1.0}), CurveSpec(TwistedCubic{}), CurveSpec(PlanarCubic{}),
      CurveSpec(Salkowski{1.0}),
  };
}

ValidationReport run_validation(const ValidationOptions& options) {
  options.tol.validate();
  if (options.samples < 2) {
    throw Error(ErrorCode::InvalidArgument, "validation needs at least 2 samples");
  }
  const std::vector<CurveSpec> curves =
      options.curves.empty() ? default_validation_curves() : options.curves;
  auto selected = [&](std::string_view id) {
    return options.only.empty() ||
           std::find(options.only.begin(), options.only.end(), id) != options.only.end();
  };

  ValidationReport report;
  for (const CurveSpec& spec : curves) {
    const CurveContext ctx = make_context(spec, options.samples, options.tol);
    for (const Identity& identity : registry()) {
      if (!selected(identity.info.id)) continue;
      ReportEntry entry;
      entry.id = identity.info.id;
      entry.description = identity.info.description;
      entry.curve = spec.name();
      entry.threshold = options.threshold_override.value_or(identity.info.threshold);
      Accum acc;
      try {
        acc = identity.fn(ctx);
        if (acc.count == 0) continue;
      } catch (const Error& e) {
        entry.verdict = Verdict::Fail;
        entry.max_residual = std::nan("");
        entry.note = e.what();
        report.entries.push_back(std::move(entry));
        continue;
      }
      entry.max_residual = acc.max;
      entry.samples = acc.count;
      entry.note = acc.note;
      const bool within = acc.max <= entry.threshold;
      if (identity.discrepancy_expected) {
        entry.verdict = within ? Verdict::Pass : Verdict::ExpectedDiscrepancy;
      } else {
        entry.verdict = within ? Verdict::Pass : Verdict::Fail;
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace spherix
