#include "grhcheck/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "grhcheck/error.hpp"

namespace grhcheck {

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

std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(V{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct V {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(double d) const {
      // JSON has no NaN/inf; keep them as strings
      if (!std::isfinite(d)) return format_double(d);
      return d;
    }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(V{}, c);
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json" || s == "json-lines" || s == "jsonl") return OutputFormat::Json;
  if (s == "human") return OutputFormat::Human;
  throw Error(ErrorKind::InvalidArgument, "unknown format " + std::string(s));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw Error(ErrorKind::InvalidArgument, "row width does not match columns");
  rows.push_back(std::move(row));
}

void write_table(std::ostream& out, const Table& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_escape(t.columns[i]);
      out << '\n';
      for (auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        out << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      for (auto& row : t.rows) {
        nlohmann::ordered_json j = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) j[t.columns[i]] = cell_json(row[i]);
        out << j.dump() << '\n';
      }
      break;
    }
    case OutputFormat::Human: {
      std::vector<std::size_t> width(t.columns.size());
      std::vector<std::vector<std::string>> text;
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (auto& row : t.rows) {
        auto& r = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          r.push_back(cell_text(row[i]));
          width[i] = std::max(width[i], r.back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
        }
        out << '\n';
      };
      line(t.columns);
      for (auto& r : text) line(r);
      break;
    }
  }
}

Table bound_report_table(const std::vector<BoundReport>& reports) {
  Table t;
  t.columns = bound_report_columns();
  for (auto& r : reports) {
    Cell measured = r.measured ? Cell(*r.measured) : Cell(std::monostate{});
    Cell margin = std::isnan(r.margin) ? Cell(std::monostate{}) : Cell(r.margin);
    t.add({r.formula_id, static_cast<std::int64_t>(r.q), r.target, measured, r.bound, margin, r.applicable,
           std::string(to_string(r.verdict))});
  }
  return t;
}

void VerdictSummary::add(Verdict v) {
  switch (v) {
    case Verdict::Pass: ++pass; break;
    case Verdict::Fail: ++fail; break;
    case Verdict::NotApplicable: ++not_applicable; break;
    case Verdict::NotFound: ++not_found; break;
  }
}

int VerdictSummary::exit_status() const noexcept {
  if (fail) return 2;
  if (not_found) return 3;
  return 0;
}

VerdictSummary summarize(const std::vector<BoundReport>& reports) {
  VerdictSummary s;
  for (auto& r : reports) s.add(r.verdict);
  return s;
}

}  // namespace grhcheck
