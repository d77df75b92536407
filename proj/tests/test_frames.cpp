#include <cmath>
#include <random>

#include "spherix/error.hpp"
#include "spherix/frames.hpp"
#include "support.hpp"

using namespace spherix;
using namespace spherix::test;

TEST(Frames, HelixAtZero) {
  const ModifiedFrame f = modified_frame(helix(), 0.0);
  expect_near(f.T, {0, 0.89443, 0.44721}, 1e-5);
  expect_near(f.N, {-0.4, 0, 0}, 1e-12);
  expect_near(f.B, {0, -0.17889, 0.35777}, 1e-5);
  EXPECT_NEAR(f.kappa, 0.4, 1e-12);
  EXPECT_NEAR(f.tau, 0.2, 1e-12);
  EXPECT_NEAR(f.kappa_prime, 0.0, 1e-12);
  EXPECT_FALSE(f.curvature_zero);
}

TEST(Frames, HelixCurvatureIsConstant) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, total_length(helix()));
  for (int i = 0; i < 20; ++i) {
    const ModifiedFrame f = modified_frame(helix(), u(rng));
    EXPECT_NEAR(f.kappa, 0.4, 1e-12);
    EXPECT_NEAR(f.tau, 0.2, 1e-12);
  }
}

TEST(Frames, CurvatureAndTorsionExamples) {
  const FrenetFrame c = frenet_frame(circle(), 0.0);
  EXPECT_NEAR(c.kappa, 1.0, 1e-12);
  EXPECT_NEAR(c.tau, 0.0, 1e-12);
  const Jet j = eval_jet(cubic(), 0.0);
  EXPECT_NEAR(curvature(j), 2.0, 1e-12);
  EXPECT_NEAR(torsion(j, curvature(j)), 3.0, 1e-12);
  EXPECT_NEAR(torsion_general(eval_jet(circle(2), 0.7)), 0.0, 1e-15);
}

TEST(Frames, PlanarCubicCurvatureZero) {
  const Jet j = eval_jet(planar(), 0.0);
  try {
    torsion_general(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CurvatureVanishes);
  }
  EXPECT_THROW(frenet_frame(j), Error);
  const ModifiedFrame f = modified_frame(j);
  EXPECT_TRUE(f.curvature_zero);
  expect_near(f.N, {0, 0, 0}, 0.0);
  expect_near(f.B, {0, 0, 0}, 0.0);
  EXPECT_NEAR(norm(f.T), 1.0, 1e-15);
}

TEST(Frames, CircleFramesCoincide) {
  const CurveSpec spec = circle();
  for (const CurvePoint& p : arclength_grid(spec, 16, 0.0, total_length(spec))) {
    const Jet j = eval_jet(spec, p.t);
    const ModifiedFrame m = modified_frame(j);
    const FrenetFrame f = frenet_frame(j);
    expect_near(m.T, f.t, 1e-12);
    expect_near(m.N, f.n, 1e-12);
    expect_near(m.B, f.b, 1e-12);
  }
}

TEST(Frames, MetricRelationsAllFamilies) {
  std::mt19937_64 rng(2);
  for (const CurveSpec& spec : {CurveSpec(Line{}), circle(), circle(2), helix(), cubic(), planar(),
                                salkowski()}) {
    std::uniform_real_distribution<double> u(spec.range().lo, spec.range().hi);
    for (int i = 0; i < 25; ++i) {
      EXPECT_LE(metric_deviation(modified_frame(eval_jet(spec, u(rng)))), 1e-12) << spec.name();
    }
  }
}

TEST(Frames, DerivativeMatrixMatchesFiniteDifferences) {
  for (const CurveSpec& spec : {helix(), circle(2), cubic(), salkowski()}) {
    for (const CurvePoint& p : arclength_grid(spec, 9, 0.0, total_length(spec))) {
      EXPECT_LE(check_frame_ode_at(spec, p.t).max(), 1e-6) << spec.name() << " t=" << p.t;
    }
  }
}

TEST(Frames, RatesMatchFiniteDifferences) {
  const CurveSpec spec = cubic();
  for (double t : {-1.0, -0.2, 0.5, 1.3}) {
    auto k = along_arclength(spec, t, [](const Jet& j) {
      const ModifiedFrame f = modified_frame(j);
      return Vec3{f.kappa, f.tau, 0};
    });
    const Vec3 d = diff_vec(k, 0.0, 1, 1e-5);
    const ModifiedFrame f = modified_frame(eval_jet(spec, t));
    EXPECT_NEAR(f.kappa_prime, d.x, 1e-7);
    EXPECT_NEAR(f.tau_prime, d.y, 1e-6);
  }
}

TEST(Frames, ConstantCurvatureGate) {
  EXPECT_TRUE(is_constant_curvature(helix(), 1e-6));
  EXPECT_TRUE(is_constant_curvature(circle(2), 1e-6));
  EXPECT_TRUE(is_constant_curvature(salkowski(), 1e-6));
  EXPECT_FALSE(is_constant_curvature(cubic(), 1e-6));
  EXPECT_FALSE(is_constant_curvature(planar(), 1e-6));
}

TEST(Frames, SalkowskiHasUnitCurvaturePositiveTorsion) {
  const CurveSpec spec = salkowski(0.6);
  for (const CurvePoint& p : arclength_grid(spec, 11, 0.0, total_length(spec))) {
    const ModifiedFrame f = modified_frame(eval_jet(spec, p.t));
    EXPECT_NEAR(f.kappa, 1.0, 1e-12);
    EXPECT_GT(f.tau, 0.0);
  }
}
