#include <algorithm>

#include "spherix/validation.hpp"
#include "support.hpp"

using namespace spherix;

TEST(Validation, DefaultRunPasses) {
  const ValidationReport r = run_validation({});
  EXPECT_TRUE(r.passed());
  std::size_t expected = 0;
  for (const ReportEntry& e : r.entries) {
    if (e.verdict == Verdict::ExpectedDiscrepancy) {
      EXPECT_EQ(e.id, "gamma-binormal-literal");
      ++expected;
    } else {
      EXPECT_EQ(e.verdict, Verdict::Pass) << e.id << " " << e.curve << " " << e.max_residual;
    }
  }
  EXPECT_GE(expected, 1u);
}

TEST(Validation, TinyThresholdFails) {
  ValidationOptions o;
  o.threshold_override = 1e-15;
  o.only = {"frame-ode"};
  const ValidationReport r = run_validation(o);
  EXPECT_FALSE(r.passed());
}

TEST(Validation, OnlyRestrictsIds) {
  ValidationOptions o;
  o.only = {"gamma-tangent", "metric-relations"};
  const ValidationReport r = run_validation(o);
  ASSERT_FALSE(r.entries.empty());
  for (const ReportEntry& e : r.entries) {
    EXPECT_TRUE(e.id == "gamma-tangent" || e.id == "metric-relations") << e.id;
  }
}

TEST(Validation, IdentityCatalogue) {
  EXPECT_TRUE(is_known_identity("frame-ode"));
  EXPECT_FALSE(is_known_identity("bogus"));
  const auto& ids = identities();
  EXPECT_TRUE(std::all_of(ids.begin(), ids.end(), [](const IdentityInfo& i) { return i.threshold > 0; }));
  EXPECT_EQ(to_string(Verdict::ExpectedDiscrepancy), "expected-discrepancy");
}
