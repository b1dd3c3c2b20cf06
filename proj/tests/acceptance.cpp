#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/suite.hpp"

using namespace pcat;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

json catalog_names(std::initializer_list<const char*> only = {}) {
  json out = json::array();
  if (only.size() != 0) {
    for (const char* n : only) out.push_back(n);
    return out;
  }
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

SuiteReport run(json cfg) { return run_suite(SuiteConfig::from_json(cfg)); }

// Every check of the report has status `want`; the report is nonempty.
void require_all(Outcome& o, const SuiteReport& r, CheckStatus want) {
  o.require(!r.checks.empty(), "no checks ran");
  for (const auto& c : r.checks)
    o.require(c.status == want, c.id + " is " + std::string(to_string(c.status)) + ": " +
                                    c.data.value("summary", std::string{}));
}

std::string counted(const SuiteReport& r, const char* noun) {
  return std::to_string(r.checks.size()) + " " + noun;
}

Outcome klein_exact() {
  Outcome o;
  const auto r = run({{"suites", {"klein-euler"}}});
  const auto* c = r.find("klein-euler");
  o.require(c != nullptr && c->status == CheckStatus::Pass, "klein-euler did not pass");
  if (!o.ok) return o;
  o.require(c->data["zeta"] == json::parse("[[4,2,2,2],[0,2,0,0],[0,0,2,0],[0,0,0,2]]"), "hom-count matrix");
  o.require(c->data["coweighting"] == json({"1/4", "1/4", "1/4", "1/4"}), "coweighting");
  o.require(c->data["chi"] == "1", "chi");
  o.detail = "zeta, coweighting (1/4,1/4,1/4,1/4) and chi = 1";
  return o;
}

Outcome p_group_closed_forms() {
  Outcome o;
  const auto r = run({{"groups", catalog_names({"c2", "c4", "c8", "c2xc2", "c3", "c9", "c3xc3", "d8", "q8"})},
                      {"suites", {"p-group-euler"}}});
  require_all(o, r, CheckStatus::Pass);
  for (const auto& c : r.checks) {
    const auto& d = c.data;
    o.require(d["chi_tilde_S"] == std::to_string(d["mu"].get<long long>()), c.id + ": reduced chi of S");
    const std::string o_expected = d["cyclic"].get<bool>() ? "1/" + std::to_string(d["prime"].get<int>()) : "1";
    o.require(d["chi_O"] == o_expected, c.id + ": chi of O");
    o.require(d["chi_tilde_Ftilde"] == d["predicted_Ftilde"], c.id + ": reduced chi of the exterior quotient");
  }
  if (o.ok) o.detail = counted(r, "p-groups");
  return o;
}

Outcome klein_homology_bound() {
  Outcome o;
  const auto r = run({{"suites", {"klein-homology"}}});
  const auto* c = r.find("klein-homology");
  o.require(c != nullptr && c->status == CheckStatus::Pass, "klein-homology did not pass");
  if (!o.ok) return o;
  const auto& b = c->data["betti_tables"][0]["betti"];
  o.require(b.size() >= 5, "homology computed through degree 4");
  if (!o.ok) return o;
  o.require(b[2].get<long long>() >= 1 && b[3].get<long long>() >= 3 && b[4].get<long long>() >= 5,
            "b_{t+1} >= 2t-1 fails");
  o.detail = "F2 Betti " + b.dump();
  return o;
}

Outcome slices_match_solve() {
  Outcome o;
  const auto r = run({{"groups", catalog_names()}, {"suites", {"slices"}}});
  require_all(o, r, CheckStatus::Pass);
  if (o.ok) o.detail = counted(r, "(group, prime, flavor, filter) combinations");
  return o;
}

Outcome equivalences_consistent() {
  Outcome o;
  const auto r = run({{"groups", catalog_names({"s3", "d8", "q8", "a4", "s4", "c2xs3"})}, {"suites", {"equivalences"}}});
  require_all(o, r, CheckStatus::Consistent);
  for (const auto& c : r.checks) {
    o.require(c.data.value("verdict", std::string{}) == "consistent-with-equivalence", c.id + ": verdict label");
    o.require(c.data.value("scope", std::string{}).find("not a proof") != std::string::npos, c.id + ": scope label");
    o.require(c.data["chi_source"] == c.data["chi_target"], c.id + ": chi");
  }
  if (o.ok) o.detail = counted(r, "functors consistent with equivalence (truncated homology, not a proof)");
  return o;
}

Outcome sfc_refuted() {
  Outcome o;
  const auto r = run({{"groups", {"c2xs3"}}, {"primes", {2}}, {"suites", {"sfc-counterexample"}}});
  const auto* c = r.find("sfc-counterexample/c2xs3/p2");
  o.require(c != nullptr, "check missing");
  if (!o.ok) return o;
  o.require(c->status == CheckStatus::Refuted, "status is " + std::string(to_string(c->status)));
  o.require(c->data["b0_sfc"] == 3 && c->data["b0_star"] == 1, "b0 values");
  o.detail = "b0 3 vs 1, refuted";
  return o;
}

Outcome catalog_suite(const char* suite, const char* noun) {
  Outcome o;
  const auto r = run({{"groups", catalog_names()}, {"suites", {suite}}});
  require_all(o, r, CheckStatus::Pass);
  if (o.ok) o.detail = counted(r, noun);
  return o;
}

Outcome spectral() {
  Outcome o;
  const auto r = run({{"suites", {"spectral"}}});
  for (const char* id : {"spectral/abutment/p2", "spectral/abutment/p3", "spectral/bottom-row/p2",
                         "spectral/bottom-row/p3"}) {
    const auto* c = r.find(id);
    o.require(c != nullptr && c->status == CheckStatus::Pass, std::string(id) + " did not pass");
  }
  if (!o.ok) return o;
  o.require(r.find("spectral/abutment/p2")->data["rows"].size() == 5, "p = 2 abutment through n = 4");
  o.require(r.find("spectral/abutment/p3")->data["rows"].size() == 3, "p = 3 abutment through n = 2");
  std::size_t scans = 0, entries = 0;
  for (const auto& c : r.checks) {
    if (c.id.rfind("spectral/conjecture/", 0) != 0) continue;
    ++scans;
    o.require(c.status == CheckStatus::Reported, c.id + " is not reported");
    for (const auto& row : c.data["rows"]) {
      ++entries;
      o.require(row["s"].get<int>() < c.data["rank"].get<int>() - 1 && row["t"].get<int>() <= 3, c.id + ": row range");
    }
  }
  o.require(scans > 0, "no conjecture scan");
  if (o.ok)
    o.detail = "abutment and bottom row hold; " + std::to_string(entries) + " E2 entries reported over " +
               std::to_string(scans) + " scan cases";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Klein four orbit category exact data", 1.0, klein_exact},
      {2, "p-group closed forms", 5.0, p_group_closed_forms},
      {3, "Klein four homology lower bound", 120.0, klein_homology_bound},
      {4, "weighting by solve equals weighting by slices", 300.0, slices_match_solve},
      {5, "equivalences consistent at desk scale", 1800.0, equivalences_consistent},
      {6, "selfcentralizing poset refutation", 10.0, sfc_refuted},
      {7, "G-radical subgroups contain O_p(G)", 10.0,
       [] { return catalog_suite("radical-core", "(group, prime) pairs"); }},
      {8, "noncontractible quotient posets force radicality", 300.0,
       [] { return catalog_suite("radical-properties", "(group, prime) pairs"); }},
      {9, "weighting and coweighting supports", 300.0,
       [] { return catalog_suite("supports", "support checks"); }},
      {10, "spectral sequence degeneration in rank two", 600.0, spectral},
      {11, "property suites", 600.0, [] { return catalog_suite("properties", "property checks"); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!in_time && o.ok) o.detail += "; over the time limit";
    failures += !pass;
    std::printf("criterion %2d  %s  %8.2f s (limit %6.0f s)  %s: %s\n", c.number, pass ? "PASS" : "FAIL", seconds,
                c.limit_seconds, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
