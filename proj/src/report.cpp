#include "pcat/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "pcat/error.hpp"

namespace pcat {

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "text" || name == "text-table") return ReportFormat::TextTable;
  if (name == "csv") return ReportFormat::Csv;
  throw Error(ErrorCode::UnknownFormat, "unknown report format '" + std::string(name) + "'");
}

namespace {

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string emit_json(const SuiteReport& r, bool timings) {
  nlohmann::ordered_json out;
  out["version"] = 1;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json row;
    row["id"] = c.id;
    row["reference"] = c.reference;
    row["status"] = std::string(to_string(c.status));
    if (timings) row["seconds"] = c.seconds;
    row["data"] = nlohmann::ordered_json::parse(c.data.dump());
    out["checks"].push_back(std::move(row));
  }
  return out.dump();
}

std::string emit_text(const SuiteReport& r, bool timings) {
  std::vector<std::vector<std::string>> rows{{"status", "check", "seconds", "summary", "reference"}};
  for (const auto& c : r.checks)
    rows.push_back({std::string(to_string(c.status)), c.id, timings ? format_seconds(c.seconds) : "-",
                    c.data.value("summary", std::string{}), c.reference});
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << '\n';
  };
  line(rows.front());
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (std::size_t i = 1; i < rows.size(); ++i) line(rows[i]);
  os << r.checks.size() << " checks: " << r.count(CheckStatus::Pass) << " pass, "
     << r.count(CheckStatus::Consistent) << " consistent, " << r.count(CheckStatus::Refuted) << " refuted, "
     << r.count(CheckStatus::Reported) << " reported, " << r.count(CheckStatus::SkippedBudget)
     << " skipped-budget, " << r.count(CheckStatus::Fail) << " fail\n";
  return os.str();
}

// One row per (check, category, field, degree) for checks carrying Betti
// tables, one bare row otherwise.
std::string emit_csv(const SuiteReport& r, bool timings) {
  std::ostringstream os;
  os << "check,status,category,field,degree,betti";
  if (timings) os << ",seconds";
  os << '\n';
  for (const auto& c : r.checks) {
    const std::string head = csv_field(c.id) + "," + std::string(to_string(c.status)) + ",";
    const std::string tail = timings ? "," + format_seconds(c.seconds) : "";
    bool any = false;
    if (c.data.contains("betti_tables")) {
      for (const auto& t : c.data["betti_tables"]) {
        const auto& b = t["betti"];
        for (std::size_t d = 0; d < b.size(); ++d) {
          os << head << csv_field(t["category"].get<std::string>()) << "," << t["field"].get<std::string>() << ","
             << d << "," << b[d].get<long long>() << tail << '\n';
          any = true;
        }
      }
    }
    if (!any) os << head << ",,," << tail << '\n';
  }
  return os.str();
}

}  // namespace

nlohmann::json report_json(const SuiteReport& r, bool timings) { return nlohmann::json::parse(emit_json(r, timings)); }

std::string emit(const SuiteReport& r, ReportFormat format, bool timings) {
  switch (format) {
    case ReportFormat::Json: return emit_json(r, timings);
    case ReportFormat::TextTable: return emit_text(r, timings);
    case ReportFormat::Csv: return emit_csv(r, timings);
  }
  throw Error(ErrorCode::UnknownFormat, "unknown report format");
}

std::string emit(const SuiteReport& r, std::string_view format, bool timings) {
  return emit(r, parse_format(format), timings);
}

}  // namespace pcat
