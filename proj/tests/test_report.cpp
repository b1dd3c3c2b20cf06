#include <doctest.h>

#include <sstream>

#include "pcat/error.hpp"
#include "pcat/report.hpp"

using namespace pcat;

namespace {

SuiteReport sample() {
  SuiteReport r;
  CheckRecord a;
  a.id = "alpha";
  a.reference = "weighting of a small category";
  a.status = CheckStatus::Pass;
  a.data = {{"summary", "zeta 2x2, chi = 1"}};
  a.seconds = 0.25;
  CheckRecord b;
  b.id = "beta";
  b.reference = "homology, with a comma";
  b.status = CheckStatus::Consistent;
  b.data = {{"summary", "iso"},
            {"betti_tables",
             {{{"category", "S[star]"}, {"field", "Q"}, {"betti", {1, 0}}},
              {{"category", "S[rad]"}, {"field", "F2"}, {"betti", {1, 2}}}}}};
  r.checks = {a, b};
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("text") == ReportFormat::TextTable);
  CHECK(parse_format("text-table") == ReportFormat::TextTable);
  CHECK(parse_format("csv") == ReportFormat::Csv);
  try {
    parse_format("yaml");
    FAIL("expected UnknownFormat");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFormat);
  }
  CHECK_THROWS_AS(emit(sample(), "xml"), Error);
}

TEST_CASE("json") {
  const auto r = sample();
  const auto j = nlohmann::json::parse(emit(r, ReportFormat::Json));
  CHECK(j["version"] == 1);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "alpha");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["seconds"] == 0.25);
  CHECK(j["checks"][1]["data"]["betti_tables"][1]["betti"][1] == 2);
  CHECK_FALSE(report_json(r, false)["checks"][0].contains("seconds"));
  CHECK(report_json(r) == j);
  CHECK(emit(SuiteReport{}, ReportFormat::Json, false) == R"({"version":1,"checks":[]})");
}

TEST_CASE("text table") {
  const auto text = emit(sample(), ReportFormat::TextTable);
  CHECK(text.find("zeta 2x2, chi = 1") != std::string::npos);
  CHECK(text.find("0.250") != std::string::npos);
  CHECK(text.find("2 checks: 1 pass, 1 consistent, 0 refuted") != std::string::npos);
  CHECK(lines(text) == 5);
  CHECK(emit(sample(), ReportFormat::TextTable, false).find("0.250") == std::string::npos);
}

TEST_CASE("csv") {
  const auto csv = emit(sample(), ReportFormat::Csv);
  std::istringstream in(csv);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "check,status,category,field,degree,betti,seconds");
  CHECK(rows[1] == "alpha,pass,,,,,0.250");
  CHECK(rows[2] == "beta,consistent,S[star],Q,0,1,0.000");
  CHECK(rows[5] == "beta,consistent,S[rad],F2,1,2,0.000");

  const auto bare = emit(sample(), ReportFormat::Csv, false);
  CHECK(bare.rfind("check,status,category,field,degree,betti\n", 0) == 0);
}
