#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace spherix::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, FramesHelixExample) {
  const CliRun r = run({"frames", "--curve", "helix:2,1", "--samples", "5", "--range", "0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 6u);
  const auto& header = rows[0];
  const auto col = std::find(header.begin(), header.end(), "kappa") - header.begin();
  ASSERT_LT(col, static_cast<long>(header.size()));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(std::stod(rows[i][col]), 0.4, 1e-12);
}

TEST(Cli, FramesCurvatureZeroLeavesTorsionEmpty) {
  const CliRun r = run({"frames", "--curve", "planarcubic", "--samples", "3"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[2].size(), rows[0].size());
  EXPECT_EQ(rows[2].back(), "");
  EXPECT_EQ(r.out.find("nan"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frames", "--curve", "spiral"}).code, kExitUsage);
  EXPECT_EQ(run({"frames"}).code, kExitUsage);
  EXPECT_EQ(run({"frames", "--curve", "helix", "--samples", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"frames", "--curve", "helix", "--range", "0,1000"}).code, kExitUsage);
  EXPECT_EQ(run({"frames", "--curve", "helix", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"indicatrix", "--curve", "helix", "--kind", "darboux"}).code, kExitUsage);
  EXPECT_EQ(run({"validate", "--only", "bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"validate", "--tolerance", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, IndicatrixTangentHelix) {
  const CliRun r = run({"indicatrix", "--kind", "tangent", "--curve", "helix:2,1", "--samples", "16",
                     "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 16u);
  for (const auto& row : doc["rows"]) EXPECT_LT(row["residual"].get<double>(), 1e-5);
}

TEST(Cli, IndicatrixPoleHelixIsDegenerate) {
  const CliRun r = run({"indicatrix", "--kind", "pole", "--curve", "helix:2,1", "--samples", "8",
                     "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  for (const auto& row : doc["rows"]) {
    EXPECT_TRUE(row["degenerate"].get<bool>());
    EXPECT_NEAR(row["point_z"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(row["point_x"].get<double>(), 0.0, 1e-12);
    EXPECT_TRUE(row["residual"].is_null());
  }
}

TEST(Cli, IndicatrixNormalTwistedCubicIsInadmissible) {
  const CliRun r = run({"indicatrix", "--kind", "normal", "--curve", "twistedcubic"});
  EXPECT_EQ(r.code, kExitInadmissible);
  EXPECT_NE(r.err.find("NonConstantCurvature"), std::string::npos);
}

TEST(Cli, ValidateDefaultAndStrict) {
  const CliRun ok = run({"validate", "--format", "json"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto doc = nlohmann::json::parse(ok.out);
  EXPECT_TRUE(doc["report"]["passed"].get<bool>());
  bool flagged = false;
  for (const auto& row : doc["rows"]) {
    if (row["verdict"] == "expected-discrepancy") flagged = row["id"] == "gamma-binormal-literal";
  }
  EXPECT_TRUE(flagged);
  EXPECT_EQ(run({"validate", "--tolerance", "1e-15"}).code, kExitValidationFailed);
  EXPECT_EQ(run({"validate", "--curve", "helix:2,1", "--only", "gamma-tangent,gamma-normal"}).code,
            kExitOk);
  EXPECT_EQ(run({"validate", "--curve", "circle:1", "--only", "frame-coincidence"}).code, kExitOk);
}

TEST(Cli, CsvAndJsonAgree) {
  const std::vector<std::string> base = {"indicatrix", "--kind", "pole", "--curve", "salkowski:1",
                                         "--samples", "9"};
  const CliRun csv = run(base);
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const CliRun js = run(json_args);
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(js.code, 0);
  const auto rows = parse_csv(csv.out);
  const auto doc = nlohmann::json::parse(js.out);
  ASSERT_EQ(rows.size() - 1, doc["rows"].size());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      const auto& v = doc["rows"][i - 1][rows[0][c]];
      if (v.is_number_float()) {
        const double a = std::stod(rows[i][c]);
        const double b = v.get<double>();
        EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b))) << rows[0][c];
      }
    }
  }
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "spherix_cli_test.csv";
  const CliRun r = run({"frames", "--curve", "circle:2", "--samples", "4", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(parse_csv(ss.str()).size(), 5u);
  std::filesystem::remove(path);
}

TEST(Cli, ParseCurve) {
  EXPECT_EQ(parse_curve("helix").name(), "helix:2,1");
  EXPECT_EQ(parse_curve("circle:2").name(), parse_curve("circle:2.0").name());
  EXPECT_THROW(parse_curve("helix:1,2,3"), UsageError);
  EXPECT_THROW(parse_curve("circle:-1"), UsageError);
}
