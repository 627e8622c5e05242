#pragma once

// Rendering of report rows as CSV, JSON lines or an aligned human table. Doubles use the
// shortest representation that round-trips, so output bytes are reproducible.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grhcheck/bounds.hpp"

namespace grhcheck {

enum class OutputFormat { Csv, Json, Human };
OutputFormat parse_format(std::string_view s);

/// Shortest round-trip decimal; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double x);

using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
};

void write_table(std::ostream& out, const Table& t, OutputFormat f);

inline const std::vector<std::string>& bound_report_columns() {
  static const std::vector<std::string> cols = {"formula_id", "q",      "target",     "measured",
                                                "bound",      "margin", "applicable", "verdict"};
  return cols;
}
Table bound_report_table(const std::vector<BoundReport>& reports);

struct VerdictSummary {
  std::size_t pass = 0, fail = 0, not_applicable = 0, not_found = 0;
  void add(Verdict v);
  /// 0 all pass or not-applicable, 2 any fail, 3 any not-found and no fail.
  int exit_status() const noexcept;
};
VerdictSummary summarize(const std::vector<BoundReport>& reports);

}  // namespace grhcheck
