#include "pcat/euler.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <tuple>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/linalg.hpp"
#include "pcat/subgroup_categories.hpp"

namespace pcat {

IntMatrix class_matrix(const FiniteCategory& c, const IsoClassIndex& classes) {
  const auto n = static_cast<Eigen::Index>(classes.num_classes());
  IntMatrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto count = c.hom_count(classes.representative(i), classes.representative(j));
      for (ObjId a : classes.classes[i])
        for (ObjId b : classes.classes[j])
          if (c.hom_count(a, b) != count)
            throw Error(ErrorCode::PreconditionViolated, "hom-set size depends on the class representative");
      z(i, j) = static_cast<std::int64_t>(count);
    }
  }
  return z;
}

IntMatrix class_matrix(const FiniteCategory& c) { return class_matrix(c, iso_classes(c)); }

std::string_view to_string(WeightKind k) { return k == WeightKind::Weighting ? "weighting" : "coweighting"; }

std::string_view to_string(WeightMethod m) {
  switch (m) {
    case WeightMethod::TriangularEI: return "triangular-EI";
    case WeightMethod::GeneralSolve: return "general-solve";
    case WeightMethod::Slices: return "slices";
  }
  return "?";
}

Rational Weighting::total() const {
  Rational sum;
  for (const auto& v : values) sum += v;
  return sum;
}

Rational Weighting::object_value(ObjId a) const {
  const auto k = static_cast<std::size_t>(classes.class_of[a]);
  return values[k] / Rational(static_cast<long>(classes.class_size(k)));
}

std::vector<std::size_t> Weighting::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (!values[k].is_zero()) out.push_back(k);
  return out;
}

namespace {

Weighting solve_triangular(const FiniteCategory& c, WeightKind kind) {
  Weighting w;
  w.kind = kind;
  w.method = WeightMethod::TriangularEI;
  w.classes = iso_classes(c);
  const IntMatrix z = class_matrix(c, w.classes);
  const auto ht = heights(c);
  const std::size_t n = w.classes.num_classes();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // weighting: row [a] involves only classes above a, so solve top-down
  const bool top_down = kind == WeightKind::Weighting;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int hx = ht[w.classes.representative(x)];
    const int hy = ht[w.classes.representative(y)];
    return top_down ? hx > hy : hx < hy;
  });

  w.values.assign(n, Rational());
  std::vector<bool> done(n, false);
  for (std::size_t k : order) {
    Rational rhs(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      const std::int64_t entry = kind == WeightKind::Weighting ? z(k, j) : z(j, k);
      if (entry == 0) continue;
      if (!done[j]) throw Error(ErrorCode::CycleDetected, "class matrix is not triangular in height order");
      rhs -= Rational(static_cast<long>(entry)) * w.values[j];
    }
    w.values[k] = rhs / Rational(static_cast<long>(z(k, k)));
    done[k] = true;
  }
  return w;
}

Weighting solve_general(const FiniteCategory& c, WeightKind kind) {
  Weighting w;
  w.kind = kind;
  w.method = WeightMethod::GeneralSolve;
  w.classes = iso_classes(c);
  const IntMatrix z = class_matrix(c, w.classes);
  Mat<Rational> a = cast_matrix<Rational>(z);
  if (kind == WeightKind::Coweighting) a.transposeInPlace();
  const Vec<Rational> ones = Vec<Rational>::Constant(a.rows(), Rational(1));
  const auto sol = solve<Rational>(a, ones);
  if (sol.status == SolveStatus::NoSolution)
    throw Error(ErrorCode::NoWeighting, std::string("no ") + std::string(to_string(kind)) + " exists");
  if (sol.status == SolveStatus::Multiple)
    throw Error(ErrorCode::NonUniqueWeighting, std::string(to_string(kind)) + " is not unique on classes");
  w.values.assign(sol.x.data(), sol.x.data() + sol.x.size());
  return w;
}

}  // namespace

Weighting weighting(const FiniteCategory& c) {
  return is_EI(c) ? solve_triangular(c, WeightKind::Weighting) : solve_general(c, WeightKind::Weighting);
}

Weighting coweighting(const FiniteCategory& c) {
  return is_EI(c) ? solve_triangular(c, WeightKind::Coweighting) : solve_general(c, WeightKind::Coweighting);
}

Weighting weighting_by_elimination(const FiniteCategory& c) { return solve_general(c, WeightKind::Weighting); }
Weighting coweighting_by_elimination(const FiniteCategory& c) { return solve_general(c, WeightKind::Coweighting); }

bool satisfies_defining_system(const FiniteCategory& c, const Weighting& w) {
  const IntMatrix z = class_matrix(c, w.classes);
  const auto n = z.rows();
  if (static_cast<std::size_t>(n) != w.values.size()) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational sum;
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::int64_t entry = w.kind == WeightKind::Weighting ? z(i, j) : z(j, i);
      sum += Rational(static_cast<long>(entry)) * w.values[j];
    }
    if (sum != Rational(1)) return false;
  }
  return true;
}

EulerReport euler_characteristic(const FiniteCategory& c) {
  EulerReport r;
  r.via_weighting = weighting(c).total();
  r.via_coweighting = coweighting(c).total();
  r.consistent = r.via_weighting == r.via_coweighting;
  if (!r.consistent)
    throw Error(ErrorCode::EquivalenceViolation, "weighting and coweighting sums differ: " + r.via_weighting.str() +
                                                     " vs " + r.via_coweighting.str());
  r.chi = r.via_weighting;
  r.chi_reduced = r.chi - Rational(1);
  return r;
}

Rational euler_chi(const FiniteCategory& c) {
  if (c.empty()) return Rational();
  return euler_characteristic(c).chi;
}

bool SliceMemo::lookup(const std::string& key, Rational& out) const {
  std::lock_guard lock(mu_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

void SliceMemo::store(const std::string& key, const Rational& value) {
  std::lock_guard lock(mu_);
  table_[key] = value;
}

std::size_t SliceMemo::size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

namespace {

// Class matrix of a skeletal EI category, rows and columns sorted by a few
// cheap invariants. Equal strings mean equal zeta matrices, hence equal chi.
std::string fingerprint(const FiniteCategory& skel) {
  const std::size_t n = skel.num_objects();
  const auto ht = heights(skel);
  std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t, ObjId>> keys;
  keys.reserve(n);
  for (ObjId a = 0; a < static_cast<ObjId>(n); ++a)
    keys.emplace_back(ht[a], skel.hom_count(a, a), skel.out(a).size(), skel.in(a).size(), a);
  std::sort(keys.begin(), keys.end());
  std::string s = std::to_string(n) + ":" + std::to_string(skel.num_morphisms()) + ":";
  for (const auto& ka : keys)
    for (const auto& kb : keys) {
      s += std::to_string(skel.hom_count(std::get<4>(ka), std::get<4>(kb)));
      s += ',';
    }
  return s;
}

Rational chi_by_slices(const FiniteCategory& c, bool dual, SliceMemo& memo);

// One value per object of a skeletal EI category.
std::vector<Rational> skeleton_values(const FiniteCategory& skel, bool dual, SliceMemo& memo, unsigned threads) {
  const std::size_t n = skel.num_objects();
  std::vector<Rational> values(n);
  auto one = [&](ObjId a) {
    const SliceCategory s = dual ? slice(skel, a, true) : coslice(skel, a, true);
    const Rational chi = chi_by_slices(s.category, dual, memo);
    values[a] = (Rational(1) - chi) / Rational(static_cast<long>(skel.hom_count(a, a)));
  };
  if (threads <= 1 || n < 2) {
    for (ObjId a = 0; a < static_cast<ObjId>(n); ++a) one(a);
    return values;
  }
  std::atomic<ObjId> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) {
    pool.emplace_back([&, t] {
      try {
        for (ObjId a = next++; a < static_cast<ObjId>(n); a = next++) one(a);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return values;
}

Rational chi_by_slices(const FiniteCategory& c, bool dual, SliceMemo& memo) {
  if (c.empty()) return Rational();
  const Subcategory skel = skeleton(c);
  const std::string key = (dual ? "s" : "c") + fingerprint(skel.category);
  Rational chi;
  if (memo.lookup(key, chi)) return chi;
  for (const auto& v : skeleton_values(skel.category, dual, memo, 1)) chi += v;
  memo.store(key, chi);
  return chi;
}

Weighting via_slices(const FiniteCategory& c, bool dual, unsigned threads, SliceMemo* memo) {
  if (!is_EI(c)) throw Error(ErrorCode::PreconditionViolated, "slice formula needs an EI category");
  SliceMemo local;
  SliceMemo& m = memo ? *memo : local;
  Weighting w;
  w.kind = dual ? WeightKind::Coweighting : WeightKind::Weighting;
  w.method = WeightMethod::Slices;
  w.classes = iso_classes(c);
  const Subcategory skel = skeleton(c);
  for (std::size_t k = 0; k < w.classes.num_classes(); ++k)
    if (skel.obj_map[k] != w.classes.representative(k))
      throw Error(ErrorCode::PreconditionViolated, "skeleton order differs from class order");
  w.values = skeleton_values(skel.category, dual, m, threads);
  return w;
}

}  // namespace

Weighting weighting_via_slices(const FiniteCategory& c, unsigned threads, SliceMemo* memo) {
  return via_slices(c, false, threads, memo);
}

Weighting coweighting_via_slices(const FiniteCategory& c, unsigned threads, SliceMemo* memo) {
  return via_slices(c, true, threads, memo);
}

Lemma41Values lemma41_values(const PermGroup& p_group) {
  const auto primes = prime_divisors(p_group.order());
  if (primes.size() != 1) throw Error(ErrorCode::PreconditionViolated, "expected a nonidentity p-group");
  Lemma41Values v;
  v.prime = primes.front();
  v.order = p_group.order();
  const Subgroup whole = whole_group(p_group);
  v.cyclic = is_cyclic(p_group, whole);
  v.center_index = p_group.order() / center(p_group, whole).order();

  auto ctx = make_context(p_group, v.prime);
  v.mu = MobiusTable(order_relation(ctx->lattice))(0, ctx->lattice.sylow_index());

  const auto open = ObjectFilter::interval(false, "1", "P", false);
  const auto half_open = ObjectFilter::interval(true, "1", "P", false);
  v.chi_tilde_S = euler_chi(build(ctx, Flavor::S, open).cat()) - Rational(1);
  v.chi_tilde_Ftilde = euler_chi(build(ctx, Flavor::FTilde, open).cat()) - Rational(1);
  v.chi_O = euler_chi(build(ctx, Flavor::O, half_open).cat());

  v.predicted_Ftilde = Rational(static_cast<long>(v.mu), static_cast<long>(v.center_index));
  v.predicted_O = v.cyclic ? Rational(1, v.prime) : Rational(1);
  v.holds = v.chi_tilde_S == Rational(static_cast<long>(v.mu)) && v.chi_tilde_Ftilde == v.predicted_Ftilde && v.chi_O == v.predicted_O;
  return v;
}

nlohmann::json weighting_json(const Weighting& w) {
  nlohmann::json j;
  j["kind"] = to_string(w.kind);
  j["method"] = to_string(w.method);
  auto& values = j["values"] = nlohmann::json::array();
  for (const auto& x : w.values) values.push_back(x.str());
  j["support"] = w.support();
  return j;
}

nlohmann::json euler_report_json(const FiniteCategory& c, const Weighting& w, const Weighting& cw,
                                 const EulerReport& e) {
  nlohmann::json j;
  auto& classes = j["classes"] = nlohmann::json::array();
  for (const auto& cls : w.classes.classes) {
    auto labels = nlohmann::json::array();
    for (ObjId a : cls) labels.push_back(c.object(a).label);
    classes.push_back(labels);
  }
  const IntMatrix z = class_matrix(c, w.classes);
  auto& zeta = j["zeta"] = nlohmann::json::array();
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < z.cols(); ++k) row.push_back(z(i, k));
    zeta.push_back(row);
  }
  j["weighting"] = weighting_json(w);
  j["coweighting"] = weighting_json(cw);
  j["chi"] = e.chi.str();
  j["chi_reduced"] = e.chi_reduced.str();
  j["consistent"] = e.consistent;
  return j;
}

}  // namespace pcat
