#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cli/config.hpp"

namespace spherix::cli {

/// Empty cells serialize as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Header row, comma-separated, LF line endings, 17 significant digits.
void write_csv(std::ostream& os, const Table& table);

/// Rows as an array of objects keyed by column name.
nlohmann::json rows_to_json(const Table& table);

nlohmann::json config_to_json(const RunConfig& config, std::string_view command);

/// CSV writes only the table; JSON writes {"config", "rows", "report"}.
void write_document(std::ostream& os, OutputFormat format, const Table& table,
                    const nlohmann::json& config, const nlohmann::json& report);

std::string format_double(double v);

}  // namespace spherix::cli
