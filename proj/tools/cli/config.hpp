#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spherix/curves.hpp"
#include "spherix/indicatrix.hpp"
#include "spherix/numerics.hpp"

namespace spherix::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitUsage = 2,
  kExitInadmissible = 3,
};

enum class OutputFormat { Csv, Json };

/// Bad command-line input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<CurveSpec> curve;
  int samples = 256;
  /// Arclength interval; empty means the whole curve.
  std::optional<std::pair<double, double>> s_range;
  Tolerance tolerance;
  /// Value given with --tolerance, if any.
  std::optional<double> tolerance_flag;
  OutputFormat format = OutputFormat::Csv;
  std::string output_path;  // empty or "-" is stdout
  std::optional<IndicatrixKind> kind;
  std::vector<std::string> only;
};

/// "helix:2,1", "circle:2", "salkowski:1", "line", "twistedcubic",
/// "planarcubic". Omitted parameters take the family defaults.
CurveSpec parse_curve(std::string_view text);

/// "a,b" -> (a, b)
std::pair<double, double> parse_pair(std::string_view text);

OutputFormat parse_format(std::string_view text);

/// Resolves the arclength interval against the curve and checks it.
std::pair<double, double> resolve_range(const RunConfig& config);

}  // namespace spherix::cli
