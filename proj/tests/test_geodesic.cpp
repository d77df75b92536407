#include <cmath>
#include <numbers>
#include <vector>

#include "spherix/error.hpp"
#include "spherix/geodesic.hpp"
#include "support.hpp"

using namespace spherix;
using namespace spherix::test;
using K = IndicatrixKind;

TEST(Geodesic, HelixClosedForms) {
  const ModifiedFrame h = modified_frame(helix(), 0.0);
  EXPECT_NEAR(gamma_closed(K::Tangent, h).value, 0.5, 1e-12);
  EXPECT_NEAR(gamma_closed(K::Normal, h).value, 2.1, 1e-12);
  const GammaClosed b = gamma_closed(K::Binormal, h);
  EXPECT_NEAR(b.value, std::sqrt(29.41), 1e-12);
  EXPECT_NEAR(b.published, std::sqrt(31.41), 1e-12);
  EXPECT_NEAR(gamma_closed(K::Tangent, modified_frame(circle(), 0.0)).value, 0.0, 1e-12);
}

TEST(Geodesic, OracleExamples) {
  EXPECT_NEAR(gamma_oracle(K::Tangent, helix(), 0.0), 0.5, 1e-6);
  EXPECT_NEAR(gamma_oracle(K::Normal, helix(), 0.0), 2.1, 1e-6);
  EXPECT_NEAR(gamma_oracle(K::Normal, circle(), 1.0), 0.0, 1e-6);
  EXPECT_NEAR(gamma_oracle(K::Binormal, helix(), 0.0), 5.4231, 1e-4);
  EXPECT_NEAR(gamma_oracle(K::Binormal, helix(), 0.0), std::sqrt(29.41), 1e-5);
}

TEST(Geodesic, ClosedMatchesOracleOnSalkowski) {
  const CurveSpec spec = salkowski();
  for (const CurvePoint& p : arclength_grid(spec, 9, 0.0, total_length(spec))) {
    for (K k : {K::Tangent, K::Normal, K::Binormal, K::Pole}) {
      const GeodesicReport r = geodesic_report_at(k, spec, p);
      EXPECT_LE(r.residual_closed, 1e-5) << to_string(k) << " s=" << p.s;
    }
    const ModifiedFrame f = modified_frame(eval_jet(spec, p.t));
    const DarbouxData d = darboux(f);
    EXPECT_NEAR(gamma_closed(K::Pole, f, d).value * std::abs(d.phi_prime), d.w_norm, 1e-12);
  }
}

TEST(Geodesic, PublishedBinormalFormIsOff) {
  const GeodesicReport r = geodesic_report(K::Binormal, helix(), 0.0);
  EXPECT_LE(r.residual_closed, 1e-5);
  EXPECT_NEAR(r.residual_published, 0.181, 1e-3);
}

namespace {

std::vector<Vec3> latitude_circle(double theta, double center, double h) {
  // Arclength-parameterized circle at polar angle theta.
  std::vector<Vec3> pts;
  const double r = std::sin(theta);
  for (int i = -2; i <= 2; ++i) {
    const double a = (center + i * h) / r;
    pts.push_back({r * std::cos(a), r * std::sin(a), std::cos(theta)});
  }
  return pts;
}

}  // namespace

TEST(Geodesic, SphereDeterminantCircles) {
  EXPECT_NEAR(gamma_sphere_det(latitude_circle(std::numbers::pi / 2, 0.3, 1e-3), 1e-3), 0.0, 1e-9);
  for (double theta : {0.3, 0.7, 1.2, 2.0}) {
    EXPECT_NEAR(std::abs(gamma_sphere_det(latitude_circle(theta, 0.1, 1e-3), 1e-3)),
                std::abs(1.0 / std::tan(theta)), 1e-5);
  }
}

TEST(Geodesic, SphereDeterminantAgreesWithGaussForm) {
  EXPECT_NEAR(std::abs(gamma_sphere_det_at(K::Tangent, helix(), 0.5)), 0.5, 1e-5);
  const CurveSpec spec = salkowski();
  for (const CurvePoint& p : arclength_grid(spec, 7, 0.05, total_length(spec) - 0.05)) {
    for (K k : {K::Tangent, K::Pole}) {
      EXPECT_NEAR(std::abs(gamma_sphere_det_at(k, spec, p.t)), gamma_oracle_at(k, spec, p.t), 1e-5);
    }
  }
}

TEST(Geodesic, SphereDeterminantErrors) {
  std::vector<Vec3> pts = latitude_circle(1.0, 0.0, 1e-3);
  pts[1] = pts[1] * 1.1;
  try {
    gamma_sphere_det(pts, 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOnUnitSphere);
  }
  pts.pop_back();
  EXPECT_THROW(gamma_sphere_det(pts, 1e-3), Error);
}
