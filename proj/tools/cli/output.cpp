#include "cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace spherix::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(double v) const { return format_double(v); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(bool v) const { return v ? "1" : "0"; }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
};

struct JsonCell {
  nlohmann::json operator()(std::monostate) const { return nullptr; }
  nlohmann::json operator()(double v) const {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  }
  nlohmann::json operator()(std::int64_t v) const { return v; }
  nlohmann::json operator()(bool v) const { return v; }
  nlohmann::json operator()(const std::string& v) const { return v; }
};

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    }
    os << '\n';
  }
}

nlohmann::json rows_to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

nlohmann::json config_to_json(const RunConfig& config, std::string_view command) {
  nlohmann::json j;
  j["command"] = command;
  j["curve"] = config.curve ? nlohmann::json(config.curve->name()) : nlohmann::json(nullptr);
  if (config.curve) {
    j["param_range"] = {config.curve->range().lo, config.curve->range().hi};
  }
  j["samples"] = config.samples;
  if (config.s_range) {
    j["range"] = {config.s_range->first, config.s_range->second};
  } else {
    j["range"] = nullptr;
  }
  j["tolerance"] = {{"abs_tol", config.tolerance.abs_tol},
                    {"rel_tol", config.tolerance.rel_tol},
                    {"fd_step", config.tolerance.fd_step}};
  if (config.tolerance_flag) j["tolerance_flag"] = *config.tolerance_flag;
  if (config.kind) j["kind"] = std::string(to_string(*config.kind));
  if (!config.only.empty()) j["only"] = config.only;
  j["format"] = config.format == OutputFormat::Csv ? "csv" : "json";
  return j;
}

void write_document(std::ostream& os, OutputFormat format, const Table& table,
                    const nlohmann::json& config, const nlohmann::json& report) {
  if (format == OutputFormat::Csv) {
    write_csv(os, table);
    return;
  }
  nlohmann::json doc;
  doc["config"] = config;
  doc["rows"] = rows_to_json(table);
  doc["report"] = report;
  os << doc.dump(2) << '\n';
}

}  // namespace spherix::cli
