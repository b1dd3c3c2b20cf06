#include "pcat/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/euler.hpp"
#include "pcat/nerve.hpp"
#include "pcat/p_subgroups.hpp"

namespace pcat {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Refuted: return "refuted";
    case CheckStatus::Consistent: return "consistent";
    case CheckStatus::Reported: return "reported";
    case CheckStatus::SkippedBudget: return "skipped-budget";
  }
  return "fail";
}

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

int SuiteReport::exit_code() const { return count(CheckStatus::Fail) > 0 ? 1 : 0; }

const CheckRecord* SuiteReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "klein-euler", "p-group-euler", "klein-homology", "slices",   "equivalences",     "sfc-counterexample",
      "radical-core", "radical-properties", "supports",  "spectral", "local-identities", "facts",
      "properties"};
  return names;
}

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::ConfigError, what); }

int parse_prime(const nlohmann::json& v) {
  if (!v.is_number_integer()) config_error("primes must be integers");
  const int p = v.get<int>();
  if (!is_prime(p)) config_error(std::to_string(p) + " is not a prime");
  return p;
}

std::size_t parse_budget(const nlohmann::json& v, const char* name) {
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    config_error(std::string("budget '") + name + "' must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) config_error("configuration must be a JSON object");
  static const std::set<std::string> known{"groups", "primes", "suites", "dmax", "fields",
                                           "budgets", "threads", "scan"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) config_error("unknown configuration key '" + key + "'");

  SuiteConfig cfg;
  std::vector<int> default_primes;
  if (j.contains("primes")) {
    if (!j["primes"].is_array()) config_error("'primes' must be a list");
    for (const auto& v : j["primes"]) default_primes.push_back(parse_prime(v));
  }

  if (j.contains("groups")) {
    if (!j["groups"].is_array()) config_error("'groups' must be a list");
    for (const auto& g : j["groups"]) {
      GroupChoice choice;
      if (g.is_string()) {
        choice.source = g.get<std::string>();
        choice.primes = default_primes;
      } else if (g.is_object() && g.contains("group") && g["group"].is_string()) {
        for (const auto& [key, _] : g.items())
          if (key != "group" && key != "primes") config_error("unknown group key '" + key + "'");
        choice.source = g["group"].get<std::string>();
        if (g.contains("primes")) {
          if (!g["primes"].is_array()) config_error("'primes' must be a list");
          for (const auto& v : g["primes"]) choice.primes.push_back(parse_prime(v));
        } else {
          choice.primes = default_primes;
        }
      } else {
        config_error("a group entry is a name or {\"group\": name, \"primes\": [...]}");
      }
      cfg.groups.push_back(std::move(choice));
    }
  }

  if (j.contains("suites")) {
    if (!j["suites"].is_array()) config_error("'suites' must be a list");
    std::set<std::string> chosen;
    for (const auto& s : j["suites"]) {
      if (!s.is_string()) config_error("suite names are strings");
      const auto name = s.get<std::string>();
      if (name == "all") {
        chosen.insert(suite_names().begin(), suite_names().end());
        continue;
      }
      if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
        config_error("unknown suite '" + name + "'");
      chosen.insert(name);
    }
    for (const auto& name : suite_names())
      if (chosen.count(name)) cfg.suites.push_back(name);
  }

  if (j.contains("dmax")) {
    if (!j["dmax"].is_object()) config_error("'dmax' maps flavor names to degrees");
    for (const auto& [key, v] : j["dmax"].items()) {
      Flavor f;
      try {
        f = parse_flavor(key);
      } catch (const Error&) {
        config_error("unknown flavor '" + key + "' in 'dmax'");
      }
      if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 8) config_error("dmax must be in 0..8");
      cfg.dmax[f] = v.get<int>();
    }
  }

  if (j.contains("fields")) {
    if (!j["fields"].is_array()) config_error("'fields' must be a list");
    cfg.rational = cfg.modular = false;
    for (const auto& v : j["fields"]) {
      if (!v.is_string()) config_error("field names are strings");
      const auto name = v.get<std::string>();
      if (name == "q" || name == "Q") {
        cfg.rational = true;
      } else if (name == "fp") {
        cfg.modular = true;
      } else if (name.size() > 1 && (name[0] == 'f' || name[0] == 'F')) {
        int q = 0;
        try {
          q = std::stoi(name.substr(1));
        } catch (const std::exception&) {
          config_error("unknown field '" + name + "'");
        }
        if (!is_prime(q)) config_error("field '" + name + "' is not a prime field");
        cfg.extra_primes.push_back(q);
      } else {
        config_error("unknown field '" + name + "'");
      }
    }
    if (!cfg.rational && !cfg.modular && cfg.extra_primes.empty()) config_error("'fields' is empty");
  }

  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (!b.is_object()) config_error("'budgets' must be an object");
    for (const auto& [key, v] : b.items()) {
      if (key == "elements") cfg.element_cap = parse_budget(v, "elements");
      else if (key == "subgroups") cfg.subgroup_cap = parse_budget(v, "subgroups");
      else if (key == "chains") cfg.chain_cap = parse_budget(v, "chains");
      else config_error("unknown budget '" + key + "'");
    }
  }

  if (j.contains("threads")) {
    if (!j["threads"].is_number_integer() || j["threads"].get<long long>() < 0)
      config_error("'threads' must be a nonnegative integer");
    cfg.threads = j["threads"].get<unsigned>();
  }

  if (j.contains("scan")) {
    if (!j["scan"].is_array()) config_error("'scan' is a list of [rank, prime, tmax]");
    cfg.scan.clear();
    for (const auto& c : j["scan"]) {
      if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() || !c[2].is_number_integer())
        config_error("'scan' is a list of [rank, prime, tmax]");
      ScanCase sc{c[0].get<int>(), parse_prime(c[1]), c[2].get<int>()};
      if (sc.rank < 1 || sc.rank > 3 || sc.tmax < 0 || sc.tmax > 8) config_error("scan case out of range");
      cfg.scan.push_back(sc);
    }
  }
  return cfg;
}

SuiteConfig SuiteConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open configuration file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("malformed configuration: ") + e.what());
  }
  return from_json(j);
}

namespace {

using nlohmann::json;

template <class Key, class Value>
class OnceCache {
 public:
  Value get(const Key& key, const std::function<Value()>& make) {
    std::shared_future<Value> fut;
    std::promise<Value> promise;
    bool owner = false;
    {
      std::lock_guard lock(mu_);
      auto it = table_.find(key);
      if (it == table_.end()) {
        fut = promise.get_future().share();
        table_.emplace(key, fut);
        owner = true;
      } else {
        fut = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(make());
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

 private:
  std::mutex mu_;
  std::map<Key, std::shared_future<Value>> table_;
};

struct LoadedGroup {
  std::string label;
  PermGroup group;
  std::vector<int> primes;
};

using CategoryKey = std::tuple<std::size_t, int, int, std::string>;

struct Env {
  const SuiteConfig& cfg;
  std::vector<LoadedGroup> groups;
  std::size_t chain_budget = kDefaultChainBudget;
  OnceCache<std::pair<std::size_t, int>, std::shared_ptr<const PGroupContext>> contexts;
  OnceCache<CategoryKey, std::shared_ptr<const SubgroupCategory>> categories;
  SliceMemo memo;

  explicit Env(const SuiteConfig& c) : cfg(c) {}

  std::shared_ptr<const PGroupContext> context(std::size_t g, int p) {
    return contexts.get({g, p}, [&] { return make_context(groups[g].group, p, cfg.subgroup_cap); });
  }

  std::shared_ptr<const SubgroupCategory> category(std::size_t g, int p, Flavor f, const ObjectFilter& filter) {
    return categories.get({g, p, static_cast<int>(f), to_string(filter)}, [&] {
      return std::make_shared<const SubgroupCategory>(build(context(g, p), f, filter));
    });
  }

  /// Coefficient primes for a check at prime p; 0 stands for Q.
  std::vector<int> fields(int p) const {
    std::vector<int> out;
    if (cfg.rational) out.push_back(0);
    if (cfg.modular) out.push_back(p);
    for (int q : cfg.extra_primes)
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    return out;
  }

  NerveOptions nerve(int dmax, int prime) const {
    NerveOptions o;
    o.dmax = dmax;
    o.prime = prime;
    o.budget = chain_budget;
    return o;
  }
};

struct Job {
  std::string id;
  std::string reference;
  std::function<void(CheckRecord&)> run;
};

std::string str(const Rational& r) { return r.str(); }

json values_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string join_ints(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string category_name(Flavor f, const ObjectFilter& filter) {
  return std::string(to_string(f)) + "[" + to_string(filter) + "]";
}

PermGroup subgroup_as_group(const PermGroup& g, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (ElemId x : generators_of(g, h)) gens.push_back(g.element(x));
  return PermGroup::enumerate(gens, g.degree());
}

bool is_p_group(std::size_t order, int& p) {
  const auto primes = prime_divisors(order);
  if (primes.size() != 1) return false;
  p = primes.front();
  return true;
}

json betti_table(const std::string& category, int prime, const std::vector<long long>& b) {
  return {{"category", category}, {"field", field_name(prime)}, {"betti", b}};
}

// Reduced rational Betti numbers in degrees 0..dmax; the empty category has
// reduced homology only in degree -1, reported as the flag `empty`.
struct ReducedHomology {
  bool empty = false;
  std::vector<long long> reduced;
  bool nonzero() const {
    return empty || std::any_of(reduced.begin(), reduced.end(), [](long long b) { return b != 0; });
  }
};

ReducedHomology reduced_homology(const FiniteCategory& c, const NerveOptions& opt) {
  ReducedHomology h;
  if (c.empty()) {
    h.empty = true;
    h.reduced.assign(static_cast<std::size_t>(opt.dmax) + 1, 0);
    return h;
  }
  h.reduced = betti(c, opt).reduced();
  return h;
}

// ---------------------------------------------------------------------------
// global checks

void klein_euler(CheckRecord& rec) {
  const PermGroup v = elementary_abelian_group(2, 2);
  auto ctx = make_context(v, 2);
  const auto cat = build(ctx, Flavor::O, ObjectFilter::interval(true, "1", "P", false));
  const auto& c = cat.cat();
  const IntMatrix z = class_matrix(c);
  IntMatrix expected(4, 4);
  expected << 4, 2, 2, 2, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2;
  const Weighting cw = coweighting(c);
  const Weighting w = weighting(c);
  const EulerReport e = euler_characteristic(c);

  json zeta = json::array();
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < z.cols(); ++j) row.push_back(z(i, j));
    zeta.push_back(row);
  }
  const bool matrix_ok = z.rows() == 4 && c.num_objects() == 4 && z == expected;
  const bool cow_ok = cw.values.size() == 4 &&
                      std::all_of(cw.values.begin(), cw.values.end(), [](const Rational& x) { return x == Rational(1, 4); });
  const bool chi_ok = e.chi == Rational(1);
  rec.status = matrix_ok && cow_ok && chi_ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"zeta", zeta},
              {"coweighting", values_json(cw.values)},
              {"weighting", values_json(w.values)},
              {"chi", str(e.chi)}};
  rec.data["summary"] = "zeta=" + zeta.dump() + " coweighting=" + values_json(cw.values).dump() + " chi=" + str(e.chi);
}

void klein_homology(Env& env, CheckRecord& rec) {
  const PermGroup v = elementary_abelian_group(2, 2);
  auto ctx = make_context(v, 2);
  const auto cat = build(ctx, Flavor::O, ObjectFilter::interval(true, "1", "P", false));
  const auto b = betti(cat.cat(), env.nerve(4, 2));
  json bounds = json::array();
  bool ok = true;
  for (int t = 1; t <= 3; ++t) {
    const long long have = b.betti[static_cast<std::size_t>(t) + 1];
    const bool holds = have >= 2 * t - 1;
    ok = ok && holds;
    bounds.push_back({{"degree", t + 1}, {"betti", have}, {"lower_bound", 2 * t - 1}, {"holds", holds}});
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"bounds", bounds}, {"betti_tables", json::array({betti_table("O[interval:[1..P)] of C2xC2", 2, b.betti)})}};
  rec.data["summary"] = "F2 Betti " + join_ints(b.betti) + " against b_{t+1} >= 2t-1";
}

void spectral_abutment(Env& env, int p, int nmax, CheckRecord& rec) {
  const auto pages = e1_e2_pages(2, p, nmax, env.chain_budget);
  const auto rows = abutment_check(pages, nmax);
  json out = json::array();
  bool ok = pages.d1_squares_to_zero;
  std::vector<long long> b;
  for (const auto& r : rows) {
    ok = ok && r.equal;
    b.push_back(r.betti);
    out.push_back({{"n", r.n}, {"e2_total", r.e2_total}, {"betti", r.betti}, {"equal", r.equal}});
  }
  json bounds = json::array();
  for (int t = 1; t + 1 <= nmax; ++t) {
    const long long need = static_cast<long long>(p) * t - 1;
    const bool holds = b[static_cast<std::size_t>(t) + 1] >= need;
    ok = ok && holds;
    bounds.push_back({{"degree", t + 1}, {"betti", b[static_cast<std::size_t>(t) + 1]}, {"lower_bound", need}, {"holds", holds}});
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"rows", out}, {"bounds", bounds}, {"pages", pages_json(pages)},
              {"betti_tables", json::array({betti_table("O[interval:[1..V)] of (Z/" + std::to_string(p) + ")^2", p, b)})}};
  rec.data["summary"] = "sum of E2 along s+t=n equals " + field_name(p) + " Betti " + join_ints(b);
}

void spectral_bottom_row(Env& env, int p, CheckRecord& rec) {
  const auto pages = e1_e2_pages(2, p, 1, env.chain_budget);
  bool ok = pages.e2[0][0] == 1;
  json row = json::array();
  for (int s = 0; s <= pages.smax; ++s) {
    row.push_back(pages.e2[static_cast<std::size_t>(s)][0]);
    if (s > 0) ok = ok && pages.e2[static_cast<std::size_t>(s)][0] == 0;
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"e2_row_0", row}};
  rec.data["summary"] = "E2 row t=0: " + row.dump();
}

void spectral_conjecture(Env& env, const ScanCase& sc, CheckRecord& rec) {
  const auto pages = e1_e2_pages(sc.rank, sc.prime, sc.tmax, env.chain_budget);
  const auto rows = conjecture_rows(pages);
  json out = json::array();
  std::size_t nonzero = 0;
  for (const auto& r : rows) {
    out.push_back({{"s", r.s}, {"t", r.t}, {"e2", r.e2}, {"vanishes", r.vanishes}});
    if (!r.vanishes) ++nonzero;
  }
  rec.status = CheckStatus::Reported;
  rec.data = {{"rank", sc.rank}, {"prime", sc.prime}, {"tmax", sc.tmax}, {"rows", out},
              {"d1_squares_to_zero", pages.d1_squares_to_zero}, {"pages", pages_json(pages)}};
  rec.data["summary"] = rows.empty() ? std::string("no entries with s < r-1")
                                     : std::to_string(rows.size() - nonzero) + " of " + std::to_string(rows.size()) +
                                           " entries E2(s,t), s < r-1, t > 0 vanish";
}

// ---------------------------------------------------------------------------
// per (group, prime) checks

void p_group_euler(Env& env, std::size_t g, CheckRecord& rec) {
  const auto v = lemma41_values(env.groups[g].group);
  rec.status = v.holds ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"order", v.order},           {"prime", v.prime},
              {"cyclic", v.cyclic},         {"mu", v.mu},
              {"center_index", v.center_index},
              {"chi_tilde_S", str(v.chi_tilde_S)},
              {"chi_tilde_Ftilde", str(v.chi_tilde_Ftilde)},
              {"predicted_Ftilde", str(v.predicted_Ftilde)},
              {"chi_O", str(v.chi_O)},      {"predicted_O", str(v.predicted_O)}};
  rec.data["summary"] = "mu=" + std::to_string(v.mu) + " chi~(S)=" + str(v.chi_tilde_S) + " chi~(F~)=" +
                        str(v.chi_tilde_Ftilde) + " chi(O)=" + str(v.chi_O);
}

void slices_check(Env& env, std::size_t g, int p, Flavor f, const ObjectFilter& filter, CheckRecord& rec) {
  const auto cat = env.category(g, p, f, filter);
  const auto& c = cat->cat();
  if (c.empty()) {
    rec.data = {{"objects", 0}};
    rec.data["summary"] = "empty category";
    return;
  }
  const Weighting w = weighting(c), ws = weighting_via_slices(c, 1, &env.memo);
  const Weighting cw = coweighting(c), cws = coweighting_via_slices(c, 1, &env.memo);
  const bool ok = w.values == ws.values && cw.values == cws.values;
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"objects", c.num_objects()},
              {"morphisms", c.num_morphisms()},
              {"classes", w.classes.num_classes()},
              {"weighting", values_json(w.values)},
              {"weighting_slices", values_json(ws.values)},
              {"coweighting", values_json(cw.values)},
              {"coweighting_slices", values_json(cws.values)},
              {"chi", str(w.total())}};
  rec.data["summary"] = std::to_string(w.classes.num_classes()) + " classes, chi=" + str(w.total()) +
                        (ok ? ", solve and slices agree" : ", solve and slices differ");
}

struct FunctorVerdict {
  bool chi_equal = false;
  bool iso = true;
  int first_bad_degree = -1;
  json data;
};

FunctorVerdict compare_functor(Env& env, const SubgroupCategory& a, const SubgroupCategory& c, int p, int dmax) {
  FunctorVerdict v;
  const FunctorMap f = induced_functor(a, c);
  const Rational chi_a = euler_chi(a.cat()), chi_c = euler_chi(c.cat());
  v.chi_equal = chi_a == chi_c;
  const std::string name_a = category_name(a.flavor, a.filter), name_c = category_name(c.flavor, c.filter);
  json fields = json::array(), tables = json::array();
  for (int q : env.fields(p)) {
    const auto r = induced_map(f, env.nerve(dmax, q));
    for (int d = 0; d <= dmax; ++d) {
      const auto i = static_cast<std::size_t>(d);
      const bool ok = r.source_betti[i] == r.target_betti[i] && r.rank[i] == r.source_betti[i];
      if (!ok && (v.first_bad_degree < 0 || d < v.first_bad_degree)) v.first_bad_degree = d;
    }
    v.iso = v.iso && r.iso;
    fields.push_back(induced_map_json(r));
    fields.back()["field"] = field_name(q);
    tables.push_back(betti_table(name_a, q, r.source_betti));
    tables.push_back(betti_table(name_c, q, r.target_betti));
  }
  v.data = {{"source", name_a},
            {"target", name_c},
            {"source_objects", a.cat().num_objects()},
            {"target_objects", c.cat().num_objects()},
            {"chi_source", str(chi_a)},
            {"chi_target", str(chi_c)},
            {"chi_equal", v.chi_equal},
            {"dmax", dmax},
            {"induced_maps", fields},
            {"betti_tables", tables}};
  return v;
}

std::string verdict_label(const FunctorVerdict& v) {
  if (v.chi_equal && v.iso) return "consistent-with-equivalence";
  if (v.first_bad_degree >= 0) return "refuted-at-degree-" + std::to_string(v.first_bad_degree);
  return "refuted-by-euler-characteristic";
}

void equivalence_check(Env& env, std::size_t g, int p, Flavor fa, ObjectFilter::Kind ka, Flavor fc,
                       ObjectFilter::Kind kc, CheckRecord& rec) {
  const auto a = env.category(g, p, fa, ObjectFilter::of(ka));
  const auto c = env.category(g, p, fc, ObjectFilter::of(kc));
  const int dmax = std::min(env.cfg.dmax.at(fa), env.cfg.dmax.at(fc));
  auto v = compare_functor(env, *a, *c, p, dmax);
  rec.status = v.chi_equal && v.iso ? CheckStatus::Consistent : CheckStatus::Fail;
  rec.data = std::move(v.data);
  rec.data["verdict"] = verdict_label(v);
  rec.data["scope"] = "truncated homology through degree " + std::to_string(dmax) +
                      " and exact Euler characteristic; consistency only, not a proof of homotopy equivalence";
  rec.data["summary"] = rec.data["verdict"].get<std::string>() + " chi=" + rec.data["chi_source"].get<std::string>() +
                        "/" + rec.data["chi_target"].get<std::string>() + " dmax=" + std::to_string(dmax);
}

void sfc_counterexample(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto a = env.category(g, p, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Sfc));
  const auto c = env.category(g, p, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Star));
  const int dmax = env.cfg.dmax.at(Flavor::S);
  auto v = compare_functor(env, *a, *c, p, dmax);
  const auto b0_source = v.data["induced_maps"][0]["source_betti"][0].get<long long>();
  const auto b0_target = v.data["induced_maps"][0]["target_betti"][0].get<long long>();
  rec.status = v.chi_equal && v.iso ? CheckStatus::Consistent : CheckStatus::Refuted;
  rec.data = std::move(v.data);
  rec.data["verdict"] = verdict_label(v);
  rec.data["b0_sfc"] = b0_source;
  rec.data["b0_star"] = b0_target;
  rec.data["summary"] = "S[sfc] -> S[star]: b0 " + std::to_string(b0_source) + " vs " + std::to_string(b0_target) +
                        ", " + rec.data["verdict"].get<std::string>();
}

void radical_core(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto ctx = env.context(g, p);
  const auto& G = ctx->group;
  const Subgroup op = o_p(G, whole_group(G), p);
  std::size_t radicals = 0;
  json bad = json::array();
  for (std::size_t i = 0; i < ctx->lattice.size(); ++i) {
    if (!ctx->lattice.attrs(i).is_G_radical) continue;
    ++radicals;
    if (!op.is_subset_of(ctx->subgroup(i))) bad.push_back(i);
  }
  rec.status = bad.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"op_order", op.order()}, {"G_radical_subgroups", radicals}, {"violations", bad}};
  rec.data["summary"] = std::to_string(radicals) + " G-radical subgroups, all containing O_p(G) of order " +
                        std::to_string(op.order());
  if (!bad.empty()) rec.data["summary"] = std::to_string(bad.size()) + " G-radical subgroups miss O_p(G)";
}

// Brown poset of a quotient group, with its reduced rational homology.
ReducedHomology quotient_brown_homology(Env& env, const PermGroup& G, int p, const Subgroup& k, const Subgroup& n,
                                        std::size_t& order) {
  const QuotientGroup q = quotient_group(G, k, n);
  order = q.group.order();
  auto ctx = make_context(q.group, p, env.cfg.subgroup_cap);
  const auto s = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Star));
  return reduced_homology(s.cat(), env.nerve(3, 0));
}

void radical_properties(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto ctx = env.context(g, p);
  const auto& G = ctx->group;
  json rows = json::array();
  bool ok = true;
  std::size_t g_side = 0, f_side = 0;
  for (const auto& cls : ctx->lattice.conj_classes()) {
    const std::size_t h = cls.front();
    const Subgroup& H = ctx->subgroup(h);
    const auto& attrs = ctx->lattice.attrs(h);
    std::size_t order_o = 0, order_ft = 0;
    const auto ho = quotient_brown_homology(env, G, p, ctx->normalizers[h], H, order_o);
    const Subgroup hc = join(G, H, ctx->centralizers[h]);
    const auto hf = quotient_brown_homology(env, G, p, ctx->normalizers[h], hc, order_ft);
    const bool g_ok = !ho.nonzero() || attrs.is_G_radical;
    const bool f_ok = !hf.nonzero() || attrs.is_F_radical;
    g_side += ho.nonzero();
    f_side += hf.nonzero();
    ok = ok && g_ok && f_ok;
    rows.push_back({{"subgroup", h},
                    {"order", H.order()},
                    {"orbit_aut_order", order_o},
                    {"orbit_aut_noncontractible", ho.nonzero()},
                    {"orbit_aut_reduced_betti", ho.reduced},
                    {"G_radical", attrs.is_G_radical},
                    {"exterior_aut_order", order_ft},
                    {"exterior_aut_noncontractible", hf.nonzero()},
                    {"exterior_aut_reduced_betti", hf.reduced},
                    {"F_radical", attrs.is_F_radical}});
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"classes", rows}};
  rec.data["summary"] = std::to_string(g_side) + " classes with noncontractible S*(N/H), " + std::to_string(f_side) +
                        " with noncontractible S*(N/HC); implications " + (ok ? "hold" : "fail");
}

enum class Support { Eab, GRadical, Cyclic, FRadical };

void support_check(Env& env, std::size_t g, int p, Flavor f, ObjectFilter::Kind k, WeightKind kind, Support s,
                   CheckRecord& rec) {
  const auto cat = env.category(g, p, f, ObjectFilter::of(k));
  const auto& c = cat->cat();
  if (c.empty()) {
    rec.data = {{"classes", 0}};
    rec.data["summary"] = "empty category";
    return;
  }
  const Weighting w = kind == WeightKind::Weighting ? weighting(c) : coweighting(c);
  const auto& L = cat->ctx->lattice;
  json off = json::array();
  for (std::size_t cls : w.support()) {
    const std::size_t h = cat->subgroup_of[static_cast<std::size_t>(w.classes.representative(cls))];
    const auto& a = L.attrs(h);
    bool inside = false;
    switch (s) {
      case Support::Eab: inside = a.is_eab; break;
      case Support::GRadical: inside = a.is_G_radical; break;
      case Support::Cyclic: inside = a.is_cyclic || a.order == 1; break;
      case Support::FRadical: inside = a.is_F_radical; break;
    }
    if (!inside) off.push_back({{"subgroup", h}, {"value", w.values[cls].str()}});
  }
  rec.status = off.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"values", values_json(w.values)}, {"support_size", w.support().size()}, {"off_support", off}};
  rec.data["summary"] = std::to_string(w.support().size()) + " of " + std::to_string(w.values.size()) +
                        " classes in the support, " + std::to_string(off.size()) + " outside";
}

// chi and low-degree rational homology of a slice against a Brown poset.
struct LocalRow {
  json row;
  bool ok = true;
};

LocalRow compare_local(Env& env, const FiniteCategory& slice_cat, const FiniteCategory& poset, std::size_t h) {
  LocalRow out;
  const Rational a = euler_chi(slice_cat) - Rational(1), b = euler_chi(poset) - Rational(1);
  const auto ha = reduced_homology(slice_cat, env.nerve(2, 0));
  const auto hb = reduced_homology(poset, env.nerve(2, 0));
  out.ok = a == b && ha.empty == hb.empty && ha.reduced == hb.reduced;
  out.row = {{"subgroup", h},
             {"chi_tilde_slice", a.str()},
             {"chi_tilde_poset", b.str()},
             {"reduced_betti_slice", ha.reduced},
             {"reduced_betti_poset", hb.reduced}};
  return out;
}

void coslice_identity(Env& env, std::size_t g, int p, Flavor f, ObjectFilter::Kind k, CheckRecord& rec) {
  const auto ctx = env.context(g, p);
  const auto cat = env.category(g, p, f, ObjectFilter::of(k));
  json rows = json::array();
  bool ok = true;
  for (const auto& cls : ctx->lattice.conj_classes()) {
    const std::size_t h = cls.front();
    if (h == 0) continue;
    const ObjId x = cat->object_of(h);
    if (x < 0) continue;
    const auto sl = coslice(cat->cat(), x, true);
    const QuotientGroup q = quotient_group(ctx->group, ctx->normalizers[h], ctx->subgroup(h));
    const auto brown = build(make_context(q.group, p, env.cfg.subgroup_cap), Flavor::S,
                             ObjectFilter::of(ObjectFilter::Kind::Star));
    auto r = compare_local(env, sl.category, brown.cat(), h);
    ok = ok && r.ok;
    rows.push_back(std::move(r.row));
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"objects", rows}};
  rec.data["summary"] = std::to_string(rows.size()) + " nonidentity classes, H//C against S*(N_G(H)/H) " +
                        (ok ? "agree" : "disagree");
}

void slice_identity(Env& env, std::size_t g, int p, Flavor f, CheckRecord& rec) {
  const auto ctx = env.context(g, p);
  const auto cat = env.category(g, p, f, ObjectFilter::of(ObjectFilter::Kind::Star));
  json rows = json::array();
  bool ok = true;
  for (const auto& cls : ctx->lattice.conj_classes()) {
    const std::size_t k = cls.front();
    const ObjId x = cat->object_of(k);
    if (k == 0 || x < 0) continue;
    const auto sl = slice(cat->cat(), x, true);
    const PermGroup K = subgroup_as_group(ctx->group, ctx->subgroup(k));
    const auto poset = build(make_context(K, p, env.cfg.subgroup_cap), Flavor::S,
                             ObjectFilter::interval(false, "1", "P", false));
    auto r = compare_local(env, sl.category, poset.cat(), k);
    ok = ok && r.ok;
    rows.push_back(std::move(r.row));
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"objects", rows}};
  rec.data["summary"] = std::to_string(rows.size()) + " nonidentity classes, C//K against S_K(1,K) " +
                        (ok ? "agree" : "disagree");
}

void fusion_facts(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto cat = env.category(g, p, Flavor::F, ObjectFilter::of(ObjectFilter::Kind::Star));
  const auto& c = cat->cat();
  const bool mono = all_monomorphisms(c);
  bool thin = true;
  for (ObjId k = 0; k < static_cast<ObjId>(c.num_objects()); ++k)
    thin = thin && is_thin(slice(c, k, false).category) && is_thin(slice(c, k, true).category);
  rec.status = mono && thin ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"monomorphisms", mono}, {"slices_thin", thin}};
  rec.data["summary"] = std::string("F*: all monomorphisms ") + (mono ? "yes" : "no") + ", slices thin " +
                        (thin ? "yes" : "no");
}

void orbit_facts(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto cat = env.category(g, p, Flavor::O, ObjectFilter::all());
  const auto& c = cat->cat();
  const bool epi = all_epimorphisms(c);
  std::vector<bool> star(c.num_objects());
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) star[a] = cat->subgroup_of[a] != 0;
  bool thin = true;
  for (ObjId h = 0; h < static_cast<ObjId>(c.num_objects()); ++h)
    thin = thin && is_thin(coslice(c, star, h, false).category) && is_thin(coslice(c, star, h, true).category);
  const auto initial = initial_objects(c);
  const ObjId trivial = cat->object_of(0);
  const bool not_initial = std::find(initial.begin(), initial.end(), trivial) == initial.end();
  rec.status = epi && thin && not_initial ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"epimorphisms", epi}, {"coslices_thin", thin}, {"trivial_not_initial", not_initial}};
  rec.data["summary"] = std::string("O: all epimorphisms ") + (epi ? "yes" : "no") + ", coslices over O* thin " +
                        (thin ? "yes" : "no") + ", trivial subgroup initial " + (not_initial ? "no" : "yes");
}

void linking_facts(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto lk = env.category(g, p, Flavor::L, ObjectFilter::of(ObjectFilter::Kind::Sfc));
  const auto ft = env.category(g, p, Flavor::FTilde, ObjectFilter::of(ObjectFilter::Kind::Sfc));
  const auto& c = lk->cat();
  const auto& G = lk->ctx->group;
  const bool mono = all_monomorphisms(c), epi = all_epimorphisms(c);
  bool free = true, quotient = true;
  for (ObjId k = 0; k < static_cast<ObjId>(c.num_objects()); ++k) {
    const Subgroup& K = lk->ctx->subgroup(lk->subgroup_of[k]);
    std::vector<MorId> acting;
    for (ElemId x : K.members())
      if (x != PermGroup::identity()) acting.push_back(lk->find_morphism(k, k, x));
    for (ObjId h = 0; h < static_cast<ObjId>(c.num_objects()); ++h) {
      for (MorId f : c.hom(h, k))
        for (MorId m : acting) free = free && c.comp(f, m) != f;
      const ObjId h2 = ft->object_of(lk->subgroup_of[h]), k2 = ft->object_of(lk->subgroup_of[k]);
      quotient = quotient && c.hom_count(h, k) == K.order() * ft->cat().hom_count(h2, k2);
    }
  }
  (void)G;
  const bool ok = mono && epi && free && quotient;
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"monomorphisms", mono}, {"epimorphisms", epi}, {"free_right_action", free}, {"quotient_is_exterior", quotient}};
  rec.data["summary"] = std::string("L[sfc]: mono ") + (mono ? "yes" : "no") + ", epi " + (epi ? "yes" : "no") +
                        ", K acts freely " + (free ? "yes" : "no") + ", |L(H,K)| = |K| |F~(H,K)| " +
                        (quotient ? "yes" : "no");
}

void aut_and_functor_facts(Env& env, std::size_t g, int p, CheckRecord& rec) {
  json auts = json::object();
  for (Flavor f : kAllFlavors) {
    const auto cat = env.category(g, p, f, ObjectFilter::all());
    auts[std::string(to_string(f))] = aut_sizes(*cat).size();
  }
  auto functor = [&](Flavor a, Flavor b) {
    return induced_functor(*env.category(g, p, a, ObjectFilter::all()), *env.category(g, p, b, ObjectFilter::all()));
  };
  json functors = json::object();
  bool ok = true;
  auto record = [&](const char* name, bool value) {
    functors[name] = value;
    ok = ok && value;
  };
  record("S->T faithful", is_faithful(functor(Flavor::S, Flavor::T)));
  record("T->L full", is_full(functor(Flavor::T, Flavor::L)));
  record("L->F full", is_full(functor(Flavor::L, Flavor::F)));
  record("F->F~ full", is_full(functor(Flavor::F, Flavor::FTilde)));
  record("T->O full", is_full(functor(Flavor::T, Flavor::O)));
  record("O->F~ full", is_full(functor(Flavor::O, Flavor::FTilde)));
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"aut_sizes_checked", auts}, {"functors", functors}};
  rec.data["summary"] = std::string("automorphism group sizes match the table; functor properties ") +
                        (ok ? "hold" : "fail");
}

void boundary_squared(Env& env, std::size_t g, int p, Flavor f, CheckRecord& rec) {
  const auto cat = env.category(g, p, f, ObjectFilter::all());
  const Subcategory sk = skeleton(cat->cat());
  const int degree = env.cfg.dmax.at(f) + 1;
  const auto counts = chain_counts(sk.category, degree);
  std::uint64_t total = 0;
  for (auto n : counts) total += n;
  if (total > env.chain_budget) throw Error(ErrorCode::BudgetExceeded, "too many simplices for the boundary check");
  const std::size_t bad = boundary_squared_violations(sk.category, degree);
  rec.status = bad == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"max_degree", degree}, {"simplices", total}, {"violations", bad}};
  rec.data["summary"] = std::to_string(total) + " simplices of the skeleton through degree " + std::to_string(degree) +
                        ", " + std::to_string(bad) + " with nonzero boundary of boundary";
}

void mobius_identity(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto ctx = env.context(g, p);
  const MobiusTable mu(order_relation(ctx->lattice));
  const std::size_t n = mu.size();
  std::size_t pairs = 0, bad = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!mu.leq(a, b)) continue;
      ++pairs;
      long long left = 0, right = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (mu.leq(a, c) && mu.leq(c, b)) {
          left += mu(a, c);
          right += mu(c, b);
        }
      const long long want = a == b ? 1 : 0;
      if (left != want || right != want) ++bad;
    }
  rec.status = bad == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"subgroups", n}, {"pairs", pairs}, {"violations", bad}, {"mu_1_P", mu(0, ctx->lattice.sylow_index())}};
  rec.data["summary"] = std::to_string(pairs) + " comparable pairs, " + std::to_string(bad) + " violations";
}

void poset_chi(Env& env, std::size_t g, int p, CheckRecord& rec) {
  json rows = json::array();
  bool ok = true;
  for (auto k : kStandardFilters) {
    const auto cat = env.category(g, p, Flavor::S, ObjectFilter::of(k));
    const Rational leinster = euler_chi(cat->cat());
    const long long nerve = cat->cat().empty() ? 0 : nerve_euler_characteristic(cat->cat());
    ok = ok && leinster == Rational(static_cast<long>(nerve));
    rows.push_back({{"filter", to_string(ObjectFilter::of(k))}, {"leinster", leinster.str()}, {"nerve", nerve}});
  }
  rec.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  rec.data = {{"filters", rows}};
  rec.data["summary"] = std::string("alternating simplex count against Leinster chi on every S filter: ") +
                        (ok ? "equal" : "different");
}

void extension_criterion(Env& env, std::size_t g, int p, CheckRecord& rec) {
  const auto ctx = env.context(g, p);
  const auto fus = env.category(g, p, Flavor::F, ObjectFilter::all());
  const auto& L = ctx->lattice;
  const std::size_t P = L.sylow_index();
  std::size_t triples = 0, extending = 0, skipped = 0;
  for (std::size_t h = 0; h < L.size(); ++h) {
    if (!L.leq(h, P)) continue;
    const Subgroup np = intersection(ctx->group, ctx->normalizers[h], ctx->sylow());
    for (std::size_t n = 0; n < L.size(); ++n) {
      if (!L.leq(h, n) || !ctx->subgroup(n).is_subset_of(np)) continue;
      for (std::size_t k = 0; k < L.size(); ++k) {
        if (!L.leq(k, P)) continue;
        for (MorId f : fus->cat().hom(fus->object_of(h), fus->object_of(k))) {
          try {
            const auto r = fusion_extends(*ctx, h, n, k, fus->rep[static_cast<std::size_t>(f)]);
            ++triples;
            extending += r.extends;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::PreconditionViolated) throw;
            ++skipped;
          }
        }
      }
    }
  }
  rec.status = CheckStatus::Pass;
  rec.data = {{"cases", triples}, {"extending", extending}, {"not_extending", triples - extending},
              {"inapplicable", skipped}};
  rec.data["summary"] = std::to_string(triples) + " cases agree (" + std::to_string(extending) + " extend, " +
                        std::to_string(triples - extending) + " do not" +
                        (triples == extending ? ", negative side vacuous" : "") + ")";
}

// ---------------------------------------------------------------------------

const char* kRefKlein = "orbit category of the Klein four-group on [1,V): hom counts, coweighting, Euler characteristic";
const char* kRefKleinBound = "orbit category of the Klein four-group: mod 2 homology grows at least like 2t-1";
const char* kRefPGroup = "p-group interval categories: Moebius function, center index and cyclicity closed forms";
const char* kRefSlices = "weighting as reduced Euler characteristics of strict coslices, coweighting dually";
const char* kRefEquivalence = "inclusion functors between p-subgroup categories are homotopy equivalences";
const char* kRefQuotient = "quotient functor from the fusion category to its exterior quotient is a homotopy equivalence";
const char* kRefSfc = "selfcentralizing Brown poset of C2 x Sigma3 is not homotopy equivalent to the Brown poset";
const char* kRefCore = "every G-radical p-subgroup contains O_p(G)";
const char* kRefRadical = "noncontractible Brown poset of N_G(H)/H (resp. exterior automorphisms) forces H radical";
const char* kRefSupportF = "coweighting of the fusion category vanishes off the elementary abelian subgroups";
const char* kRefSupportOW = "weighting of the orbit category vanishes off the G-radical subgroups";
const char* kRefSupportOC = "coweighting of the orbit category vanishes off the cyclic subgroups";
const char* kRefSupportL = "weighting of the centric linking system vanishes off the F-radical subgroups";
const char* kRefSpectral = "composite functor spectral sequence degenerates for rank two: E2 totals equal orbit homology";
const char* kRefBottom = "bottom row of the E2 page: F_p at the origin, zero elsewhere";
const char* kRefConjecture = "conjectured concentration of E2 in the column s = r-1 (reported, not asserted)";
const char* kRefCosliceS = "H//S* has the Euler characteristic and homology of the Brown poset of N_G(H)/H";
const char* kRefCosliceT = "H//T* has the Euler characteristic and homology of the Brown poset of N_G(H)/H";
const char* kRefCosliceO = "H//O has the Euler characteristic and homology of the Brown poset of N_G(H)/H";
const char* kRefSliceF = "F*//K has the Euler characteristic and homology of S_K(1,K)";
const char* kRefSliceL = "L*//K has the Euler characteristic and homology of S_K(1,K)";
const char* kRefFactsF = "fusion category: monomorphisms and thin slices";
const char* kRefFactsO = "orbit category: epimorphisms, thin coslices, trivial subgroup not initial";
const char* kRefFactsL = "centric linking system: monomorphisms, epimorphisms, free right action of K";
const char* kRefFactsAut = "automorphism groups of the six categories and the faithful and full comparison functors";
const char* kRefBoundary = "nerve chain complexes satisfy boundary of boundary equals zero";
const char* kRefMobius = "Moebius function inverts the zeta function of the subgroup poset";
const char* kRefPosetChi = "poset Euler characteristic from the nerve equals the Leinster Euler characteristic";
const char* kRefExtension = "extension criterion for fusion morphisms on selfcentralizing subgroups against brute force";

struct Inclusion {
  const char* name;
  Flavor fa;
  ObjectFilter::Kind ka;
  Flavor fc;
  ObjectFilter::Kind kc;
};

const Inclusion kInclusions[] = {
    {"a-S-star-rad", Flavor::S, ObjectFilter::Kind::StarRad, Flavor::S, ObjectFilter::Kind::Star},
    {"a-S-sfc-rad", Flavor::S, ObjectFilter::Kind::SfcRad, Flavor::S, ObjectFilter::Kind::Sfc},
    {"a-S-star-eab", Flavor::S, ObjectFilter::Kind::StarEab, Flavor::S, ObjectFilter::Kind::Star},
    {"b-T-star-rad", Flavor::T, ObjectFilter::Kind::StarRad, Flavor::T, ObjectFilter::Kind::Star},
    {"b-T-sfc-rad", Flavor::T, ObjectFilter::Kind::SfcRad, Flavor::T, ObjectFilter::Kind::Sfc},
    {"b-T-star-eab", Flavor::T, ObjectFilter::Kind::StarEab, Flavor::T, ObjectFilter::Kind::Star},
    {"c-F-star-eab", Flavor::F, ObjectFilter::Kind::StarEab, Flavor::F, ObjectFilter::Kind::Star},
    {"d-O-rad", Flavor::O, ObjectFilter::Kind::Rad, Flavor::O, ObjectFilter::Kind::All},
    {"d-O-star-rad", Flavor::O, ObjectFilter::Kind::StarRad, Flavor::O, ObjectFilter::Kind::Star},
    {"d-O-sfc-rad", Flavor::O, ObjectFilter::Kind::SfcRad, Flavor::O, ObjectFilter::Kind::Sfc},
    {"e-Ftilde-sfc-rad", Flavor::FTilde, ObjectFilter::Kind::SfcRad, Flavor::FTilde, ObjectFilter::Kind::Sfc},
    {"e-Ftilde-star-eab", Flavor::FTilde, ObjectFilter::Kind::StarEab, Flavor::FTilde, ObjectFilter::Kind::Star},
    {"f-L-sfc-rad", Flavor::L, ObjectFilter::Kind::SfcRad, Flavor::L, ObjectFilter::Kind::Sfc},
    {"f-L-star-eab", Flavor::L, ObjectFilter::Kind::StarEab, Flavor::L, ObjectFilter::Kind::Star},
    {"quotient-F-Ftilde", Flavor::F, ObjectFilter::Kind::Star, Flavor::FTilde, ObjectFilter::Kind::Star},
};

bool enabled(const SuiteConfig& cfg, std::string_view name) {
  return std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end();
}

std::vector<Job> plan(Env& env) {
  const auto& cfg = env.cfg;
  std::vector<Job> jobs;
  auto add = [&](std::string id, const char* ref, std::function<void(CheckRecord&)> run) {
    jobs.push_back({std::move(id), ref, std::move(run)});
  };

  if (enabled(cfg, "klein-euler")) add("klein-euler", kRefKlein, [](CheckRecord& r) { klein_euler(r); });
  if (enabled(cfg, "klein-homology"))
    add("klein-homology", kRefKleinBound, [&env](CheckRecord& r) { klein_homology(env, r); });
  if (enabled(cfg, "spectral")) {
    add("spectral/abutment/p2", kRefSpectral, [&env](CheckRecord& r) { spectral_abutment(env, 2, 4, r); });
    add("spectral/abutment/p3", kRefSpectral, [&env](CheckRecord& r) { spectral_abutment(env, 3, 2, r); });
    add("spectral/bottom-row/p2", kRefBottom, [&env](CheckRecord& r) { spectral_bottom_row(env, 2, r); });
    add("spectral/bottom-row/p3", kRefBottom, [&env](CheckRecord& r) { spectral_bottom_row(env, 3, r); });
    for (const auto& sc : cfg.scan)
      add("spectral/conjecture/r" + std::to_string(sc.rank) + "-p" + std::to_string(sc.prime) + "-t" +
              std::to_string(sc.tmax),
          kRefConjecture, [&env, sc](CheckRecord& r) { spectral_conjecture(env, sc, r); });
  }

  for (std::size_t g = 0; g < env.groups.size(); ++g) {
    const auto& lg = env.groups[g];
    int pg = 0;
    if (enabled(cfg, "p-group-euler") && lg.group.order() > 1 && is_p_group(lg.group.order(), pg))
      add("p-group-euler/" + lg.label, kRefPGroup, [&env, g](CheckRecord& r) { p_group_euler(env, g, r); });

    for (int p : lg.primes) {
      const std::string at = lg.label + "/p" + std::to_string(p);
      if (enabled(cfg, "slices"))
        for (Flavor f : kAllFlavors)
          for (auto k : kStandardFilters) {
            const auto filter = ObjectFilter::of(k);
            add("slices/" + at + "/" + category_name(f, filter), kRefSlices,
                [&env, g, p, f, filter](CheckRecord& r) { slices_check(env, g, p, f, filter, r); });
          }
      if (enabled(cfg, "equivalences"))
        for (const auto& inc : kInclusions) {
          const bool quotient = inc.fa != inc.fc;
          add("equivalences/" + at + "/" + inc.name, quotient ? kRefQuotient : kRefEquivalence,
              [&env, g, p, inc](CheckRecord& r) { equivalence_check(env, g, p, inc.fa, inc.ka, inc.fc, inc.kc, r); });
        }
      if (enabled(cfg, "sfc-counterexample"))
        add("sfc-counterexample/" + at, kRefSfc, [&env, g, p](CheckRecord& r) { sfc_counterexample(env, g, p, r); });
      if (enabled(cfg, "radical-core"))
        add("radical-core/" + at, kRefCore, [&env, g, p](CheckRecord& r) { radical_core(env, g, p, r); });
      if (enabled(cfg, "radical-properties"))
        add("radical-properties/" + at, kRefRadical,
            [&env, g, p](CheckRecord& r) { radical_properties(env, g, p, r); });
      if (enabled(cfg, "supports")) {
        add("supports/" + at + "/F-star-coweighting", kRefSupportF, [&env, g, p](CheckRecord& r) {
          support_check(env, g, p, Flavor::F, ObjectFilter::Kind::Star, WeightKind::Coweighting, Support::Eab, r);
        });
        add("supports/" + at + "/O-weighting", kRefSupportOW, [&env, g, p](CheckRecord& r) {
          support_check(env, g, p, Flavor::O, ObjectFilter::Kind::All, WeightKind::Weighting, Support::GRadical, r);
        });
        add("supports/" + at + "/O-coweighting", kRefSupportOC, [&env, g, p](CheckRecord& r) {
          support_check(env, g, p, Flavor::O, ObjectFilter::Kind::All, WeightKind::Coweighting, Support::Cyclic, r);
        });
        add("supports/" + at + "/L-sfc-weighting", kRefSupportL, [&env, g, p](CheckRecord& r) {
          support_check(env, g, p, Flavor::L, ObjectFilter::Kind::Sfc, WeightKind::Weighting, Support::FRadical, r);
        });
      }
      if (enabled(cfg, "local-identities")) {
        add("local-identities/" + at + "/S-coslice", kRefCosliceS, [&env, g, p](CheckRecord& r) {
          coslice_identity(env, g, p, Flavor::S, ObjectFilter::Kind::Star, r);
        });
        add("local-identities/" + at + "/T-coslice", kRefCosliceT, [&env, g, p](CheckRecord& r) {
          coslice_identity(env, g, p, Flavor::T, ObjectFilter::Kind::Star, r);
        });
        add("local-identities/" + at + "/O-coslice", kRefCosliceO, [&env, g, p](CheckRecord& r) {
          coslice_identity(env, g, p, Flavor::O, ObjectFilter::Kind::All, r);
        });
        add("local-identities/" + at + "/F-slice", kRefSliceF,
            [&env, g, p](CheckRecord& r) { slice_identity(env, g, p, Flavor::F, r); });
        add("local-identities/" + at + "/L-slice", kRefSliceL,
            [&env, g, p](CheckRecord& r) { slice_identity(env, g, p, Flavor::L, r); });
      }
      if (enabled(cfg, "facts")) {
        add("facts/" + at + "/fusion", kRefFactsF, [&env, g, p](CheckRecord& r) { fusion_facts(env, g, p, r); });
        add("facts/" + at + "/orbit", kRefFactsO, [&env, g, p](CheckRecord& r) { orbit_facts(env, g, p, r); });
        add("facts/" + at + "/linking", kRefFactsL, [&env, g, p](CheckRecord& r) { linking_facts(env, g, p, r); });
        add("facts/" + at + "/automorphisms", kRefFactsAut,
            [&env, g, p](CheckRecord& r) { aut_and_functor_facts(env, g, p, r); });
      }
      if (enabled(cfg, "properties")) {
        for (Flavor f : kAllFlavors)
          add("properties/" + at + "/boundary-squared/" + std::string(to_string(f)), kRefBoundary,
              [&env, g, p, f](CheckRecord& r) { boundary_squared(env, g, p, f, r); });
        add("properties/" + at + "/mobius", kRefMobius, [&env, g, p](CheckRecord& r) { mobius_identity(env, g, p, r); });
        add("properties/" + at + "/poset-chi", kRefPosetChi, [&env, g, p](CheckRecord& r) { poset_chi(env, g, p, r); });
        add("properties/" + at + "/extension-criterion", kRefExtension,
            [&env, g, p](CheckRecord& r) { extension_criterion(env, g, p, r); });
      }
    }
  }
  return jobs;
}

CheckRecord run_job(const Job& job) {
  CheckRecord rec;
  rec.id = job.id;
  rec.reference = job.reference;
  const auto start = std::chrono::steady_clock::now();
  try {
    job.run(rec);
  } catch (const Error& e) {
    const bool budget = e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::CapExceeded;
    rec.status = budget ? CheckStatus::SkippedBudget : CheckStatus::Fail;
    rec.data = {{"error", e.what()}};
    rec.data["summary"] = e.what();
  } catch (const std::exception& e) {
    rec.status = CheckStatus::Fail;
    rec.data = {{"error", e.what()}};
    rec.data["summary"] = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!rec.data.contains("summary")) rec.data["summary"] = "";
  return rec;
}

std::string group_label(const std::string& source, const GroupSpec& spec) {
  if (find_in_catalog(source)) return source;
  if (!spec.name.empty()) return spec.name;
  return std::filesystem::path(source).stem().string();
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  Env env(config);
  if (std::getenv("PCAT_BUDGET_CHAINS") != nullptr) env.chain_budget = default_chain_budget();
  else if (config.chain_cap > 0) env.chain_budget = config.chain_cap;

  for (const auto& choice : config.groups) {
    GroupSpec spec;
    try {
      spec = resolve_group(choice.source);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, "cannot load group '" + choice.source + "': " + e.what());
    }
    LoadedGroup lg{group_label(choice.source, spec), spec.enumerate(config.element_cap), choice.primes};
    if (lg.primes.empty()) lg.primes = prime_divisors(lg.group.order());
    env.groups.push_back(std::move(lg));
  }

  const std::vector<Job> jobs = plan(env);
  std::vector<CheckRecord> records(jobs.size());
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) records[i] = run_job(jobs[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  SuiteReport report;
  report.checks = std::move(records);
  return report;
}

}  // namespace pcat
