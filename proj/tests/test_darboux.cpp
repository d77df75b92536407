#include <cmath>

#include "spherix/darboux.hpp"
#include "spherix/error.hpp"
#include "support.hpp"

using namespace spherix;
using namespace spherix::test;

TEST(Darboux, HelixAtZero) {
  const DarbouxData d = darboux(modified_frame(helix(), 0.0));
  expect_near(d.w, {0, 0, 0.44721}, 1e-5);
  EXPECT_NEAR(d.w_norm, std::sqrt(0.2), 1e-12);
  EXPECT_NEAR(d.phi, 0.46365, 1e-5);
  EXPECT_NEAR(d.phi_prime, 0.0, 1e-12);
  expect_near(d.C, {0, 0, 1}, 1e-12);
}

TEST(Darboux, CircleVectorIsBinormal) {
  const ModifiedFrame f = modified_frame(circle(), 1.1);
  const DarbouxData d = darboux(f);
  expect_near(d.w, f.B, 1e-12);
  EXPECT_NEAR(d.w_norm, 1.0, 1e-12);
  EXPECT_NEAR(d.phi, 0.0, 1e-12);
  expect_near(d.C, f.B, 1e-12);
}

TEST(Darboux, Errors) {
  try {
    darboux(modified_frame(eval_jet(cubic(), 0.5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConstantCurvature);
  }
  try {
    darboux(modified_frame(eval_jet(CurveSpec(Line{}), 0.5)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateFrame);
  }
}

TEST(Darboux, IdentitiesOnConstantCurvatureFamilies) {
  for (const CurveSpec& spec : {helix(), circle(2), salkowski(), salkowski(2.5)}) {
    for (const CurvePoint& p : arclength_grid(spec, 9, 0.0, total_length(spec))) {
      EXPECT_LE(check_alignment_at(spec, p.t), 1e-6) << spec.name();
      EXPECT_LE(check_rotation_at(spec, p.t).max(), 1e-6) << spec.name();
      const ModifiedFrame f = modified_frame(eval_jet(spec, p.t));
      EXPECT_LE(lancret_deviation(f, darboux(f)), 1e-12);
    }
  }
}

TEST(Darboux, PhiRateMatchesFiniteDifferences) {
  const CurveSpec spec = salkowski();
  for (const CurvePoint& p : arclength_grid(spec, 5, 0.1, total_length(spec) - 0.1)) {
    auto phi = along_arclength(spec, p.t, [](const Jet& j) {
      return Vec3{darboux(modified_frame(j)).phi, 0, 0};
    });
    const DarbouxData d = darboux(modified_frame(eval_jet(spec, p.t)));
    EXPECT_NEAR(d.phi_prime, diff_vec(phi, 0.0, 1, 1e-5).x, 1e-7);
    EXPECT_GT(d.phi_prime, 0.0);
    EXPECT_NEAR(norm(d.C), 1.0, 1e-14);
  }
}
