#pragma once

#include <gtest/gtest.h>

#include "spherix/curves.hpp"
#include "spherix/vec3.hpp"

namespace spherix::test {

inline void expect_near(const Vec3& got, const Vec3& want, double tol) {
  EXPECT_LE(norm(got - want), tol) << "got " << got << " want " << want;
}

inline CurveSpec helix() { return CurveSpec(Helix{2.0, 1.0}); }
inline CurveSpec circle(double r = 1.0) { return CurveSpec(Circle{r}); }
inline CurveSpec cubic() { return CurveSpec(TwistedCubic{}); }
inline CurveSpec planar() { return CurveSpec(PlanarCubic{}); }
inline CurveSpec salkowski(double m = 1.0) { return CurveSpec(Salkowski{m}); }

}  // namespace spherix::test
