#include "cli/config.hpp"

#include <charconv>
#include <cmath>

#include "spherix/error.hpp"

namespace spherix::cli {

namespace {

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string token(text.substr(0, comma));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + token + "'");
    }
    if (used != token.size() || !std::isfinite(v)) {
      throw UsageError("not a number: '" + token + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw UsageError("trailing comma in parameter list");
  }
  return out;
}

}  // namespace

CurveSpec parse_curve(std::string_view text) {
  const auto colon = text.find(':');
  const std::string family(text.substr(0, colon));
  const std::vector<double> p =
      colon == std::string_view::npos ? std::vector<double>{} : parse_numbers(text.substr(colon + 1));
  auto expect = [&](std::size_t max) {
    if (p.size() > max) {
      throw UsageError("too many parameters for curve family '" + family + "'");
    }
  };
  try {
    if (family == "line") {
      expect(0);
      return CurveSpec(Line{});
    }
    if (family == "circle") {
      expect(1);
      return CurveSpec(Circle{p.empty() ? 1.0 : p[0]});
    }
    if (family == "helix") {
      expect(2);
      if (p.size() == 1) throw UsageError("helix needs two parameters: helix:a,b");
      return CurveSpec(p.empty() ? Helix{} : Helix{p[0], p[1]});
    }
    if (family == "twistedcubic") {
      expect(0);
      return CurveSpec(TwistedCubic{});
    }
    if (family == "planarcubic") {
      expect(0);
      return CurveSpec(PlanarCubic{});
    }
    if (family == "salkowski") {
      expect(1);
      return CurveSpec(Salkowski{p.empty() ? 1.0 : p[0]});
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown curve family '" + family +
                   "' (expected line, circle, helix, twistedcubic, planarcubic, salkowski)");
}

std::pair<double, double> parse_pair(std::string_view text) {
  const std::vector<double> v = parse_numbers(text);
  if (v.size() != 2) throw UsageError("expected two comma-separated numbers, got '" + std::string(text) + "'");
  return {v[0], v[1]};
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::pair<double, double> resolve_range(const RunConfig& config) {
  const double length = total_length(*config.curve);
  if (!config.s_range) return {0.0, length};
  const auto [lo, hi] = *config.s_range;
  const double slack = config.tolerance.abs_tol;
  if (!(lo >= -slack && hi <= length + slack && lo <= hi)) {
    throw UsageError("--range must lie within [0, " + std::to_string(length) + "] with s_lo <= s_hi");
  }
  return {std::max(lo, 0.0), std::min(hi, length)};
}

}  // namespace spherix::cli
