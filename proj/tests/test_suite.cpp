#include <doctest.h>

#include <set>

#include "pcat/error.hpp"
#include "pcat/report.hpp"
#include "pcat/suite.hpp"

using namespace pcat;
using nlohmann::json;

namespace {

ErrorCode config_code(const json& j) {
  try {
    SuiteConfig::from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::CapExceeded;
}

SuiteReport run(const json& j) { return run_suite(SuiteConfig::from_json(j)); }

}  // namespace

TEST_CASE("configuration parsing") {
  const auto cfg = SuiteConfig::from_json(json::parse(R"({
    "groups": ["s3", {"group": "s4", "primes": [3]}],
    "primes": [2],
    "suites": ["slices", "klein-euler"],
    "dmax": {"t": 1, "o": 2},
    "fields": ["q", "f5"],
    "budgets": {"chains": 1000, "elements": 500},
    "threads": 1,
    "scan": [[2, 2, 2]]
  })"));
  REQUIRE(cfg.groups.size() == 2);
  CHECK(cfg.groups[0].primes == std::vector<int>{2});
  CHECK(cfg.groups[1].primes == std::vector<int>{3});
  CHECK(cfg.suites == std::vector<std::string>{"klein-euler", "slices"});
  CHECK(cfg.dmax.at(Flavor::T) == 1);
  CHECK(cfg.dmax.at(Flavor::S) == 3);
  CHECK(cfg.rational);
  CHECK_FALSE(cfg.modular);
  CHECK(cfg.extra_primes == std::vector<int>{5});
  CHECK(cfg.chain_cap == 1000);
  CHECK(cfg.element_cap == 500);
  CHECK(cfg.threads == 1);
  REQUIRE(cfg.scan.size() == 1);
  CHECK(cfg.scan[0].prime == 2);

  CHECK(SuiteConfig::from_json(json{{"suites", {"all"}}}).suites == suite_names());
  CHECK(SuiteConfig::from_json(json::object()).suites.empty());
}

TEST_CASE("configuration errors") {
  const char* bad[] = {
      R"([])",
      R"({"colour": 1})",
      R"({"suites": ["nope"]})",
      R"({"primes": [4]})",
      R"({"groups": [{"group": "s3", "primes": [2], "x": 1}]})",
      R"({"groups": [3]})",
      R"({"dmax": {"q": 2}})",
      R"({"dmax": {"s": 9}})",
      R"({"fields": ["f6"]})",
      R"({"budgets": {"chains": 0}})",
      R"({"budgets": {"frogs": 10}})",
      R"({"threads": -1})",
      R"({"scan": [[2, 2]]})",
      R"({"scan": [[2, "x", 2]]})",
  };
  for (const char* text : bad) {
    INFO(text);
    CHECK(config_code(json::parse(text)) == ErrorCode::ConfigError);
  }
  CHECK_THROWS_AS(SuiteConfig::from_file("/nonexistent/config.json"), Error);
}

TEST_CASE("empty report") {
  const auto r = run(json{{"suites", json::array()}});
  CHECK(r.checks.empty());
  CHECK(r.exit_code() == 0);
  CHECK(emit(r, ReportFormat::Json) == R"({"version":1,"checks":[]})");
}

TEST_CASE("Klein four example") {
  const auto r = run(json{{"suites", {"klein-euler", "klein-homology"}}});
  REQUIRE(r.checks.size() == 2);
  const auto* e = r.find("klein-euler");
  REQUIRE(e != nullptr);
  CHECK(e->status == CheckStatus::Pass);
  CHECK(e->data.contains("summary"));
  CHECK_FALSE(e->reference.empty());
  CHECK(r.find("klein-homology")->status == CheckStatus::Pass);
  CHECK(r.find("missing") == nullptr);
}

TEST_CASE("counterexample is refuted without failing the run") {
  const auto r = run(json{{"groups", {"c2xs3"}}, {"primes", {2}}, {"suites", {"sfc-counterexample"}}, {"threads", 1}});
  REQUIRE(r.checks.size() == 1);
  const auto& c = r.checks.front();
  CHECK(c.id == "sfc-counterexample/c2xs3/p2");
  CHECK(c.status == CheckStatus::Refuted);
  CHECK(c.data["b0_sfc"] == 3);
  CHECK(c.data["b0_star"] == 1);
  CHECK(r.count(CheckStatus::Refuted) == 1);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("budget overruns are skipped") {
  const auto r = run(json{{"groups", {"s4"}},
                          {"primes", {2}},
                          {"suites", {"equivalences"}},
                          {"budgets", {{"chains", 50}}},
                          {"threads", 1}});
  CHECK(r.count(CheckStatus::SkippedBudget) > 0);
  CHECK(r.count(CheckStatus::Fail) == 0);
  CHECK(r.exit_code() == 0);
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::SkippedBudget) CHECK(c.data.contains("summary"));
}

TEST_CASE("unknown groups are a configuration error") {
  try {
    run(json{{"groups", {"nosuchgroup"}}, {"suites", {"slices"}}});
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
}

TEST_CASE("deterministic and independent of the thread count") {
  const json base = {{"groups", {"s3", "d8"}}, {"suites", {"all"}}, {"scan", {{2, 2, 2}}}};
  json one = base, three = base;
  one["threads"] = 1;
  three["threads"] = 3;
  const auto a = emit(run(one), ReportFormat::Json, false);
  const auto b = emit(run(three), ReportFormat::Json, false);
  const auto c = emit(run(three), ReportFormat::Json, false);
  CHECK(a == b);
  CHECK(b == c);

  const auto r = run(one);
  CHECK(r.exit_code() == 0);
  for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].id < r.checks[i].id);
  std::set<std::string> suites;
  for (const auto& chk : r.checks) suites.insert(chk.id.substr(0, chk.id.find('/')));
  CHECK(suites.size() == suite_names().size());
}

TEST_CASE("status names") {
  CHECK(to_string(CheckStatus::SkippedBudget) == "skipped-budget");
  CHECK(to_string(CheckStatus::Consistent) == "consistent");
  CHECK(to_string(CheckStatus::Refuted) == "refuted");
}
