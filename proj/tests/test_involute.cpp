#include <cmath>

#include "spherix/error.hpp"
#include "spherix/involute.hpp"
#include "support.hpp"

using namespace spherix;
using namespace spherix::test;
using P = InvolutePair;

TEST(Involute, HelixPairsVanish) {
  for (P p : {P::TangentPole, P::BinormalPole, P::NormalPole}) {
    EXPECT_NEAR(involute_inner(p, helix(), 0.0), 0.0, 1e-12) << to_string(p);
    EXPECT_TRUE(involute_scan(p, helix(), 64).is_involute) << to_string(p);
  }
}

TEST(Involute, SalkowskiNormalPoleIsNotInvolute) {
  const CurveSpec spec = salkowski();
  EXPECT_TRUE(involute_scan(P::TangentPole, spec, 64).is_involute);
  EXPECT_TRUE(involute_scan(P::BinormalPole, spec, 64).is_involute);
  const InvoluteReport r = involute_scan(P::NormalPole, spec, 64);
  EXPECT_FALSE(r.is_involute);
  EXPECT_GT(r.max_abs_inner, 1e-3);
  for (const InvoluteSample& s : r.samples) {
    const ModifiedFrame f = modified_frame(spec, s.s);
    const DarbouxData d = darboux(f);
    EXPECT_NEAR(s.inner_product, -d.phi_prime * f.kappa * d.w_norm, 1e-12);
  }
}

TEST(Involute, CircleTangentPole) {
  EXPECT_TRUE(involute_scan(P::TangentPole, circle(), 64).is_involute);
}

TEST(Involute, VelocityIsSpeedTimesTangent) {
  const CurveSpec spec = salkowski();
  const ModifiedFrame f = modified_frame(spec, 0.3);
  const DarbouxData d = darboux(f);
  for (IndicatrixKind k : {IndicatrixKind::Tangent, IndicatrixKind::Normal,
                           IndicatrixKind::Binormal, IndicatrixKind::Pole}) {
    expect_near(indicatrix_velocity(k, f, d), indicatrix_speed(k, f, d) * indicatrix_tangent(k, f, d),
                1e-12);
  }
}

TEST(Involute, ScanErrors) {
  EXPECT_THROW(involute_scan(P::TangentPole, helix(), 2), Error);
  EXPECT_THROW(involute_scan(P::TangentPole, cubic(), 16), Error);
}

TEST(Involute, PairNames) {
  EXPECT_EQ(to_string(P::TangentPole), "T_vs_C");
  EXPECT_EQ(to_string(P::BinormalPole), "B_vs_C");
  EXPECT_EQ(to_string(P::NormalPole), "N_vs_C");
}
