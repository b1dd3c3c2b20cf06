#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pcat/suite.hpp"

namespace pcat {

enum class ReportFormat { Json, TextTable, Csv };

/// json | text | text-table | csv. Throws UnknownFormat.
ReportFormat parse_format(std::string_view name);

/// {"version": 1, "checks": [...]}; wall times are dropped unless `timings`.
nlohmann::json report_json(const SuiteReport& r, bool timings = true);

std::string emit(const SuiteReport& r, ReportFormat format, bool timings = true);
std::string emit(const SuiteReport& r, std::string_view format, bool timings = true);

}  // namespace pcat
