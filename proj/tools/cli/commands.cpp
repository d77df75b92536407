#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "cli/output.hpp"
#include "spherix/darboux.hpp"
#include "spherix/error.hpp"
#include "spherix/frames.hpp"
#include "spherix/indicatrix.hpp"
#include "spherix/validation.hpp"

namespace spherix::cli {

namespace {

std::vector<Cell> vec_cells(const Vec3& v) { return {v.x, v.y, v.z}; }

void append(std::vector<Cell>& row, std::vector<Cell> more) {
  row.insert(row.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<std::string> vec_columns(const std::string& prefix) {
  return {prefix + "_x", prefix + "_y", prefix + "_z"};
}

// Runs `emit` against the --out file or the given stream.
int with_output(const RunConfig& config, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& emit) {
  if (config.output_path.empty() || config.output_path == "-") return emit(out);
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << config.output_path << "' for writing\n";
    return kExitValidationFailed;
  }
  const int code = emit(file);
  file.flush();
  if (!file) {
    err << "error: failed writing '" << config.output_path << "'\n";
    return kExitValidationFailed;
  }
  return code;
}

Tolerance with_abs_tol(const RunConfig& config) {
  Tolerance tol = config.tolerance;
  if (config.tolerance_flag) tol.abs_tol = *config.tolerance_flag;
  tol.validate();
  return tol;
}

}  // namespace

int cmd_frames(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CurveSpec& curve = *config.curve;
  const Tolerance tol = with_abs_tol(config);
  const auto [lo, hi] = resolve_range(config);

  Table table;
  table.columns = {"s", "t", "x", "y", "z"};
  for (const char* p : {"T", "N", "B"})
    for (auto& c : vec_columns(p)) table.columns.push_back(c);
  for (const char* c : {"kappa", "tau", "kappa_prime"}) table.columns.emplace_back(c);

  std::size_t zeros = 0;
  for (const CurvePoint& p : arclength_grid(curve, config.samples, lo, hi, tol)) {
    const Jet jet = eval_jet(curve, p.t);
    const ModifiedFrame f = modified_frame(jet, tol);
    std::vector<Cell> row = {p.s, p.t};
    append(row, vec_cells(jet.r));
    append(row, vec_cells(f.T));
    append(row, vec_cells(f.N));
    append(row, vec_cells(f.B));
    row.emplace_back(f.kappa);
    // Torsion and its companions are undefined at a curvature zero.
    row.push_back(f.curvature_zero ? Cell{} : Cell{f.tau});
    row.push_back(f.curvature_zero ? Cell{} : Cell{f.kappa_prime});
    zeros += f.curvature_zero ? 1 : 0;
    table.add_row(std::move(row));
  }
  const nlohmann::json report = {{"rows", table.rows.size()}, {"curvature_zero_rows", zeros}};
  return with_output(config, out, err, [&](std::ostream& os) {
    write_document(os, config.format, table, config_to_json(config, "frames"), report);
    return kExitOk;
  });
}

int cmd_indicatrix(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CurveSpec& curve = *config.curve;
  const IndicatrixKind kind = *config.kind;
  const Tolerance tol = with_abs_tol(config);
  const auto [lo, hi] = resolve_range(config);

  Table table;
  table.columns = {"s", "t"};
  for (auto& c : vec_columns("point")) table.columns.push_back(c);
  table.columns.emplace_back("speed");
  for (const char* p : {"tangent", "cov_closed", "cov_oracle"})
    for (auto& c : vec_columns(p)) table.columns.push_back(c);
  table.columns.emplace_back("residual");
  table.columns.emplace_back("degenerate");

  if (kind != IndicatrixKind::Tangent && !is_constant_curvature(curve, kConstantCurvatureGate, tol)) {
    const std::string message =
        "the " + std::string(to_string(kind)) + " indicatrix needs constant curvature; " +
        curve.name() + " fails the |kappa'| <= 1e-6 gate";
    err << "error: NonConstantCurvature: " << message << '\n';
    Table error_table;
    error_table.columns = {"error", "message"};
    error_table.add_row({std::string("NonConstantCurvature"), message});
    const nlohmann::json report = {{"error", "NonConstantCurvature"}, {"message", message}};
    return with_output(config, out, err, [&](std::ostream& os) {
      write_document(os, config.format, error_table, config_to_json(config, "indicatrix"), report);
      return kExitInadmissible;
    });
  }

  std::size_t degenerate = 0;
  double max_residual = 0.0;
  for (const CurvePoint& p : arclength_grid(curve, config.samples, lo, hi, tol)) {
    IndicatrixSample sample;
    try {
      sample = indicatrix_sample_at(kind, curve, p, tol);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonConstantCurvature || e.code() == ErrorCode::DegenerateFrame) {
        err << "error: " << e.what() << '\n';
        return kExitInadmissible;
      }
      throw;
    }
    std::optional<Vec3> oracle;
    if (!sample.degenerate) {
      try {
        oracle = cov_deriv_numeric_at(kind, curve, p.t, tol);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateIndicatrix && e.code() != ErrorCode::TorsionVanishes) throw;
        sample.degenerate = true;
      }
    }
    std::vector<Cell> row = {p.s, p.t};
    append(row, vec_cells(sample.point));
    row.emplace_back(sample.speed);
    if (sample.degenerate) {
      for (int i = 0; i < 10; ++i) row.emplace_back(std::monostate{});
      ++degenerate;
    } else {
      append(row, vec_cells(sample.unit_tangent));
      append(row, vec_cells(sample.cov_deriv));
      append(row, vec_cells(*oracle));
      const double residual = norm(sample.cov_deriv - *oracle);
      max_residual = std::max(max_residual, residual);
      row.emplace_back(residual);
    }
    row.emplace_back(sample.degenerate);
    table.add_row(std::move(row));
  }
  const nlohmann::json report = {{"rows", table.rows.size()},
                                 {"degenerate_rows", degenerate},
                                 {"max_residual", max_residual}};
  return with_output(config, out, err, [&](std::ostream& os) {
    write_document(os, config.format, table, config_to_json(config, "indicatrix"), report);
    return kExitOk;
  });
}

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ValidationOptions options;
  if (config.curve) options.curves = {*config.curve};
  options.samples = config.samples;
  options.threshold_override = config.tolerance_flag;
  options.only = config.only;
  options.tol = config.tolerance;
  const ValidationReport report = run_validation(options);

  Table table;
  table.columns = {"id", "curve", "max_residual", "threshold", "samples", "verdict", "note"};
  std::size_t pass = 0, fail = 0, expected = 0;
  for (const ReportEntry& e : report.entries) {
    table.add_row({e.id, e.curve, e.max_residual, e.threshold, static_cast<std::int64_t>(e.samples),
                   std::string(to_string(e.verdict)), e.note});
    (e.verdict == Verdict::Pass ? pass : e.verdict == Verdict::Fail ? fail : expected)++;
  }
  const bool passed = report.passed() && !report.entries.empty();
  const nlohmann::json summary = {{"passed", passed},
                                  {"entries", report.entries.size()},
                                  {"pass", pass},
                                  {"fail", fail},
                                  {"expected_discrepancy", expected}};
  err << "validate: " << pass << " pass, " << fail << " fail, " << expected
      << " expected discrepancy\n";
  if (report.entries.empty()) err << "validate: no identity applies to the selected curves\n";
  return with_output(config, out, err, [&](std::ostream& os) {
    write_document(os, config.format, table, config_to_json(config, "validate"), summary);
    return passed ? kExitOk : kExitValidationFailed;
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified orthogonal frames, spherical indicatrices and their geodesic curvatures",
               "spherix"};
  app.require_subcommand(1);

  struct RawOptions {
    std::string curve;
    int samples = 256;
    std::string range;
    std::string tolerance;
    std::string format = "csv";
    std::string out;
    std::string kind;
    std::vector<std::string> only;
  } raw;

  auto add_common = [&](CLI::App* sub, bool curve_required) {
    auto* c = sub->add_option("--curve", raw.curve,
                              "family[:params]: line, circle:r, helix:a,b, twistedcubic, "
                              "planarcubic, salkowski:m");
    if (curve_required) c->required();
    sub->add_option("--samples", raw.samples, "number of samples (>= 2)")->capture_default_str();
    sub->add_option("--tolerance", raw.tolerance,
                    "validate: threshold for every identity; frames/indicatrix: abs_tol");
    sub->add_option("--format", raw.format, "csv or json")->capture_default_str();
    sub->add_option("--out", raw.out, "output file (default stdout)");
  };

  CLI::App* frames = app.add_subcommand("frames", "sample the modified and Frenet frame data");
  add_common(frames, true);
  frames->add_option("--range", raw.range, "arclength interval s_lo,s_hi (default: whole curve)");

  CLI::App* indicatrix = app.add_subcommand("indicatrix", "sample a spherical indicatrix");
  add_common(indicatrix, true);
  indicatrix->add_option("--range", raw.range, "arclength interval s_lo,s_hi (default: whole curve)");
  indicatrix->add_option("--kind", raw.kind, "tangent, normal, binormal or pole")->required();

  CLI::App* validate = app.add_subcommand("validate", "check every identity against numerical oracles");
  add_common(validate, false);
  validate->add_option("--only", raw.only, "comma-separated identity ids")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  RunConfig config;
  try {
    if (!raw.curve.empty()) config.curve = parse_curve(raw.curve);
    if (raw.samples < 2) throw UsageError("--samples must be >= 2");
    config.samples = raw.samples;
    if (!raw.range.empty()) config.s_range = parse_pair(raw.range);
    if (!raw.tolerance.empty()) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(raw.tolerance, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != raw.tolerance.size() || !(v > 0.0) || !std::isfinite(v)) {
        throw UsageError("--tolerance must be a positive number");
      }
      config.tolerance_flag = v;
    }
    config.format = parse_format(raw.format);
    config.output_path = raw.out;
    if (!raw.kind.empty()) {
      config.kind = parse_indicatrix_kind(raw.kind);
      if (!config.kind) throw UsageError("unknown --kind '" + raw.kind + "'");
    }
    for (const std::string& id : raw.only) {
      if (!is_known_identity(id)) throw UsageError("unknown identity '" + id + "' in --only");
    }
    config.only = raw.only;
    if (config.curve) resolve_range(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*frames) return cmd_frames(config, out, err);
    if (*indicatrix) return cmd_indicatrix(config, out, err);
    return cmd_validate(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidationFailed;
  }
}

}  // namespace spherix::cli
