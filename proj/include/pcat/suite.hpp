#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcat/spectral.hpp"
#include "pcat/subgroup_categories.hpp"

namespace pcat {

enum class CheckStatus { Pass, Fail, Refuted, Consistent, Reported, SkippedBudget };

std::string_view to_string(CheckStatus s);

/// One verification result. `data` always carries a "summary" string.
struct CheckRecord {
  std::string id;
  std::string reference;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0.0;
};

struct SuiteReport {
  std::vector<CheckRecord> checks;  // sorted by id

  std::size_t count(CheckStatus s) const;
  /// 0 unless some check failed, then 1.
  int exit_code() const;
  const CheckRecord* find(std::string_view id) const;
};

struct GroupChoice {
  std::string source;       // catalog name or group file
  std::vector<int> primes;  // empty: every prime dividing the order
};

struct SuiteConfig {
  std::vector<GroupChoice> groups;
  std::vector<std::string> suites;
  std::map<Flavor, int> dmax{{Flavor::S, 3}, {Flavor::T, 2}, {Flavor::L, 2},
                             {Flavor::F, 3}, {Flavor::O, 3}, {Flavor::FTilde, 3}};
  bool rational = true;          // homology over Q
  bool modular = true;           // homology over F_p for the prime of the check
  std::vector<int> extra_primes; // further F_q coefficient fields
  std::size_t element_cap = kDefaultElementCap;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  std::size_t chain_cap = 0;     // 0: default_chain_budget()
  unsigned threads = 0;          // 0: hardware concurrency
  std::vector<ScanCase> scan{{2, 2, 3}, {2, 3, 3}, {3, 2, 3}, {3, 3, 3}};

  /// Throws ConfigError on unknown keys, unknown suites, nonpositive budgets
  /// and non-prime primes.
  static SuiteConfig from_json(const nlohmann::json& j);
  static SuiteConfig from_file(const std::string& path);
};

/// Names accepted in SuiteConfig::suites.
const std::vector<std::string>& suite_names();

/// Runs every enabled check on a bounded worker pool. Budget overruns inside a
/// check turn it into SkippedBudget; any other exception is a Fail.
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace pcat
