#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spherix/curves.hpp"
#include "spherix/numerics.hpp"

namespace spherix {

enum class Verdict { Pass, Fail, ExpectedDiscrepancy };

std::string_view to_string(Verdict v) noexcept;

/// One identity checked on one curve.
struct ReportEntry {
  std::string id;
  std::string description;
  std::string curve;
  double max_residual = 0.0;
  double threshold = 0.0;
  std::size_t samples = 0;
  Verdict verdict = Verdict::Pass;
  std::string note;
};

struct ValidationReport {
  std::vector<ReportEntry> entries;

  /// True iff no entry failed. Expected discrepancies do not count.
  [[nodiscard]] bool passed() const;
};

struct IdentityInfo {
  std::string_view id;
  std::string_view description;
  double threshold;
};

/// Every identity the suite knows, with its pinned default threshold.
const std::vector<IdentityInfo>& identities();
bool is_known_identity(std::string_view id);

/// Line, Circle(1), Circle(2), Helix(2,1), TwistedCubic, PlanarCubic,
/// Salkowski(1), each on its default range.
std::vector<CurveSpec> default_validation_curves();

struct ValidationOptions {
  std::vector<CurveSpec> curves;  // empty: default_validation_curves()
  int samples = 64;
  /// Replaces every identity threshold when set.
  std::optional<double> threshold_override;
  /// Restrict to these identity ids; empty runs all.
  std::vector<std::string> only;
  Tolerance tol;
};

/// Runs every applicable identity on every curve over a uniform arclength
/// grid. Identities that do not apply to a curve (e.g. constant-curvature
/// identities on the twisted cubic) produce no entry.
ValidationReport run_validation(const ValidationOptions& options);

}  // namespace spherix
