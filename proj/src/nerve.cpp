#include "pcat/nerve.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <map>
#include <unordered_set>

#include "pcat/error.hpp"
#include "pcat/field.hpp"
#include "pcat/linalg.hpp"
#include "pcat/perm_group.hpp"
#include "pcat/sparse_reduce.hpp"

namespace pcat {

std::size_t default_chain_budget() {
  const char* env = std::getenv("PCAT_BUDGET_CHAINS");
  if (env == nullptr || *env == '\0') return kDefaultChainBudget;
  std::size_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0)
    throw Error(ErrorCode::ConfigError, std::string("PCAT_BUDGET_CHAINS must be a positive integer, got '") + env + "'");
  return value;
}

std::string field_name(int prime) { return prime == 0 ? "Q" : "F" + std::to_string(prime); }

std::vector<long long> BettiResult::reduced() const {
  auto out = betti;
  if (!out.empty() && out[0] > 0) --out[0];
  return out;
}

std::vector<std::uint64_t> chain_counts(const FiniteCategory& c, int max_degree) {
  const std::size_t n = c.num_objects();
  std::vector<std::uint64_t> totals;
  std::vector<std::uint64_t> ending(n, 1), next(n);
  totals.push_back(n);
  for (int d = 1; d <= max_degree; ++d) {
    std::fill(next.begin(), next.end(), 0);
    for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
      if (c.is_identity(f)) continue;
      std::uint64_t& slot = next[c.cod(f)];
      const std::uint64_t add = ending[c.dom(f)];
      slot = slot > UINT64_MAX - add ? UINT64_MAX : slot + add;
    }
    ending.swap(next);
    std::uint64_t total = 0;
    for (auto v : ending) total = total > UINT64_MAX - v ? UINT64_MAX : total + v;
    totals.push_back(total);
  }
  return totals;
}

namespace {

constexpr ChainKey kConeTag = ChainKey(1) << 127;

struct ChainLevel {
  std::vector<ChainKey> keys;  // sorted
  std::vector<MorId> mors;     // n entries per chain, same order as keys
};

// Nondegenerate simplices of the nerve, enumerated lexicographically up to a
// degree, plus on-the-fly cofaces one degree higher.
class Nerve {
 public:
  Nerve(const FiniteCategory& c, int bits) : cat_(c), bits_(bits) {
    const std::size_t n = c.num_objects();
    nonid_out_.resize(n);
    nonid_in_.resize(n);
    factors_.resize(c.num_morphisms());
    for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
      if (c.is_identity(f)) continue;
      nonid_out_[c.dom(f)].push_back(f);
      nonid_in_[c.cod(f)].push_back(f);
    }
    for (ObjId x = 0; x < static_cast<ObjId>(n); ++x)
      for (MorId a : nonid_in_[x])
        for (MorId b : nonid_out_[x]) factors_[c.comp(a, b)].emplace_back(a, b);
  }

  const FiniteCategory& cat() const { return cat_; }
  int bits() const { return bits_; }
  int max_level() const { return static_cast<int>(levels_.size()) - 1; }
  const ChainLevel& level(int n) const { return levels_[n]; }
  std::size_t size(int n) const { return levels_[n].keys.size(); }
  const MorId* chain(int n, std::size_t i) const { return levels_[n].mors.data() + i * n; }

  void enumerate(int max_degree) {
    levels_.assign(1, {});
    for (ObjId x = 0; x < static_cast<ObjId>(cat_.num_objects()); ++x) levels_[0].keys.push_back(ChainKey(x));
    for (int n = 1; n <= max_degree; ++n) {
      ChainLevel next;
      if (n == 1) {
        for (MorId f = 0; f < static_cast<MorId>(cat_.num_morphisms()); ++f) {
          if (cat_.is_identity(f)) continue;
          next.mors.push_back(f);
          next.keys.push_back(ChainKey(f + 1));
        }
      } else {
        const ChainLevel& prev = levels_.back();
        std::vector<MorId> ext;
        for (std::size_t i = 0; i < prev.keys.size(); ++i) {
          const MorId* c = prev.mors.data() + i * (n - 1);
          ext.assign(nonid_out_[cat_.cod(c[n - 2])].begin(), nonid_out_[cat_.cod(c[n - 2])].end());
          std::sort(ext.begin(), ext.end());
          for (MorId h : ext) {
            next.mors.insert(next.mors.end(), c, c + n - 1);
            next.mors.push_back(h);
            next.keys.push_back((prev.keys[i] << bits_) | ChainKey(h + 1));
          }
        }
      }
      levels_.push_back(std::move(next));
    }
  }

  ChainKey key(const MorId* f, int n) const {
    ChainKey k = 0;
    for (int i = 0; i < n; ++i) k = (k << bits_) | ChainKey(f[i] + 1);
    return k;
  }

  // Simplices tau of degree n+1 with a face d_i tau equal to the given
  // simplex, with sign (-1)^i; repeated keys are summed by the caller.
  void cofaces(int n, std::size_t idx, std::vector<std::pair<ChainKey, int>>& out) const {
    out.clear();
    if (n == 0) {
      const auto x = static_cast<ObjId>(idx);
      for (MorId g : nonid_in_[x]) out.emplace_back(ChainKey(g + 1), 1);
      for (MorId g : nonid_out_[x]) out.emplace_back(ChainKey(g + 1), -1);
      return;
    }
    const MorId* f = chain(n, idx);
    const ChainKey self = levels_[n].keys[idx];
    const int shift_all = n * bits_;
    for (MorId g : nonid_in_[cat_.dom(f[0])]) out.emplace_back((ChainKey(g + 1) << shift_all) | self, 1);
    const int last_sign = (n + 1) % 2 == 0 ? 1 : -1;
    for (MorId h : nonid_out_[cat_.cod(f[n - 1])]) out.emplace_back((self << bits_) | ChainKey(h + 1), last_sign);
    for (int k = 0; k < n; ++k) {
      // replace f[k] by the pair (a, b); the prefix has k entries, the suffix n-1-k
      const int suffix_bits = (n - 1 - k) * bits_;
      const ChainKey suffix = suffix_bits == 0 ? 0 : (self & ((ChainKey(1) << suffix_bits) - 1));
      const ChainKey prefix = self >> ((n - k) * bits_);
      const int sign = (k + 1) % 2 == 0 ? 1 : -1;
      for (const auto& [a, b] : factors_[f[k]]) {
        ChainKey t = (prefix << bits_) | ChainKey(a + 1);
        t = (t << bits_) | ChainKey(b + 1);
        t = (t << suffix_bits) | suffix;
        out.emplace_back(t, sign);
      }
    }
  }

 private:
  const FiniteCategory& cat_;
  int bits_;
  std::vector<std::vector<MorId>> nonid_out_, nonid_in_;
  std::vector<std::vector<std::pair<MorId, MorId>>> factors_;
  std::vector<ChainLevel> levels_;
};

int key_bits(std::size_t num_morphisms) { return std::max(1, static_cast<int>(std::bit_width(num_morphisms))); }

void check_key_width(int bits, int top_degree) {
  if (bits * top_degree > 126)
    throw Error(ErrorCode::BudgetExceeded, "simplices of degree " + std::to_string(top_degree) + " do not fit a 126-bit key");
}

std::uint64_t check_budget(const FiniteCategory& c, int enumerate_to, std::size_t budget, std::uint64_t already = 0) {
  const auto counts = chain_counts(c, enumerate_to);
  std::uint64_t total = already;
  for (auto v : counts) total = total > UINT64_MAX - v ? UINT64_MAX : total + v;
  if (total > budget)
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " simplices needed, budget " + std::to_string(budget));
  return total;
}

template <class Ops>
SparseColumn<typename Ops::Coef> make_column(const Ops& ops, const std::vector<std::pair<ChainKey, int>>& raw,
                                             ChainKey tag = 0, int scale = 1) {
  SparseColumn<typename Ops::Coef> col;
  col.reserve(raw.size());
  for (const auto& [k, s] : raw) col.push_back({k | tag, ops.from_int(s * scale)});
  canonicalize(ops, col);
  return col;
}

// rank of the coboundary delta^n for n = 0..dmax, with clearing.
template <class Ops>
std::vector<std::size_t> coboundary_ranks(const Nerve& nv, int dmax, const Ops& ops) {
  std::vector<std::size_t> ranks;
  std::unordered_set<ChainKey, ChainKeyHash> cleared;
  std::vector<std::pair<ChainKey, int>> raw;
  for (int n = 0; n <= dmax; ++n) {
    ColumnReducer<Ops> red(ops);
    std::unordered_set<ChainKey, ChainKeyHash> pivots;
    const auto& lvl = nv.level(n);
    for (std::size_t i = 0; i < lvl.keys.size(); ++i) {
      if (cleared.count(lvl.keys[i])) continue;
      nv.cofaces(n, i, raw);
      if (auto p = red.insert(make_column(ops, raw))) pivots.insert(*p);
    }
    ranks.push_back(red.rank());
    cleared.swap(pivots);
  }
  return ranks;
}

std::vector<long long> betti_from_ranks(const Nerve& nv, int dmax, const std::vector<std::size_t>& ranks) {
  std::vector<long long> b;
  for (int n = 0; n <= dmax; ++n) {
    long long v = static_cast<long long>(nv.size(n)) - static_cast<long long>(ranks[n]);
    if (n > 0) v -= static_cast<long long>(ranks[n - 1]);
    b.push_back(v);
  }
  return b;
}

template <class F>
decltype(auto) with_ops(int prime, F&& f) {
  if (prime == 0) {
    try {
      return f(Int64Ops{});
    } catch (const IntegerOverflow&) {
      return f(IntegerOps{});
    }
  }
  if (prime < 2 || prime > 65521 || !is_prime(prime))
    throw Error(ErrorCode::PreconditionViolated, "coefficient prime out of range: " + std::to_string(prime));
  return f(ModPOps{static_cast<std::uint32_t>(prime)});
}

bool has_initial_or_terminal(const FiniteCategory& c) {
  return !initial_objects(c).empty() || !terminal_objects(c).empty();
}

std::vector<long long> point_betti(int dmax) {
  std::vector<long long> b(dmax + 1, 0);
  b[0] = 1;
  return b;
}

std::vector<long long> betti_raw(const FiniteCategory& c, int prime, int dmax, std::size_t budget,
                                 std::vector<std::uint64_t>* chains) {
  const int bits = key_bits(c.num_morphisms());
  check_key_width(bits, dmax + 1);
  check_budget(c, dmax, budget);
  Nerve nv(c, bits);
  nv.enumerate(dmax);
  if (chains) *chains = chain_counts(c, dmax + 1);
  const auto ranks = with_ops(prime, [&](auto ops) { return coboundary_ranks(nv, dmax, ops); });
  return betti_from_ranks(nv, dmax, ranks);
}

}  // namespace

BettiResult betti(const FiniteCategory& c, const NerveOptions& opt) {
  if (opt.dmax < 0) throw Error(ErrorCode::PreconditionViolated, "dmax must be nonnegative");
  BettiResult r;
  r.prime = opt.prime;
  r.dmax = opt.dmax;
  if (c.empty()) {
    r.betti.assign(opt.dmax + 1, 0);
    r.chains.assign(opt.dmax + 2, 0);
    return r;
  }
  if (opt.use_shortcut && has_initial_or_terminal(c)) {
    r.shortcut = true;
    r.betti = point_betti(opt.dmax);
    r.chains = chain_counts(c, opt.dmax + 1);
    return r;
  }
  if (opt.use_skeleton) {
    const Subcategory s = skeleton(c);
    if (s.category.num_objects() < c.num_objects()) {
      r.skeleton = true;
      r.betti = betti_raw(s.category, opt.prime, opt.dmax, opt.budget, &r.chains);
      return r;
    }
  }
  r.betti = betti_raw(c, opt.prime, opt.dmax, opt.budget, &r.chains);
  return r;
}

namespace {

template <class S>
std::vector<long long> dense_betti_impl(const Nerve& nv, int dmax) {
  // boundary d_n : C_n -> C_{n-1} for n = 1..dmax+1, built from faces
  std::vector<int> ranks(dmax + 2, 0);
  for (int n = 1; n <= dmax + 1; ++n) {
    const auto& rows = nv.level(n - 1).keys;
    const auto& cols = nv.level(n).keys;
    Mat<S> d = Mat<S>::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    auto row_of = [&](ChainKey k) {
      auto it = std::lower_bound(rows.begin(), rows.end(), k);
      return static_cast<Eigen::Index>(it - rows.begin());
    };
    const FiniteCategory& c = nv.cat();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const MorId* f = nv.chain(n, j);
      const auto col = static_cast<Eigen::Index>(j);
      if (n == 1) {
        d(row_of(ChainKey(c.cod(f[0]))), col) += S(1);
        d(row_of(ChainKey(c.dom(f[0]))), col) -= S(1);
        continue;
      }
      std::vector<MorId> face;
      for (int i = 0; i <= n; ++i) {
        face.clear();
        bool degenerate = false;
        for (int k = 0; k < n; ++k) {
          if (i == 0 && k == 0) continue;
          if (i == n && k == n - 1) continue;
          if (i > 0 && i < n && k == i - 1) {
            const MorId g = c.comp(f[k], f[k + 1]);
            if (c.is_identity(g)) degenerate = true;
            face.push_back(g);
            ++k;
            continue;
          }
          face.push_back(f[k]);
        }
        if (degenerate) continue;
        const S sign = i % 2 == 0 ? S(1) : S(-1);
        d(row_of(nv.key(face.data(), n - 1)), col) += sign;
      }
    }
    ranks[n] = rank<S>(d);
  }
  std::vector<long long> b;
  for (int n = 0; n <= dmax; ++n) b.push_back(static_cast<long long>(nv.size(n)) - ranks[n] - ranks[n + 1]);
  return b;
}

}  // namespace

std::vector<long long> betti_dense(const FiniteCategory& c, int prime, int dmax) {
  if (c.empty()) return std::vector<long long>(dmax + 1, 0);
  const int bits = key_bits(c.num_morphisms());
  check_key_width(bits, dmax + 1);
  check_budget(c, dmax + 1, 200'000);
  Nerve nv(c, bits);
  nv.enumerate(dmax + 1);
  if (prime == 0) return dense_betti_impl<Rational>(nv, dmax);
  return dispatch_prime(prime, [&]<int P>() { return dense_betti_impl<Zp<P>>(nv, dmax); });
}

namespace {

// Source and target restricted to skeleta where the functor allows it.
struct ReducedFunctor {
  Subcategory source;
  Subcategory target;
  bool target_reduced = false;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
};

ReducedFunctor reduce_to_skeleta(const FunctorMap& f) {
  ReducedFunctor r;
  r.source = skeleton(*f.source);
  const FiniteCategory& tc = *f.target;
  const auto tclasses = iso_classes(tc);
  std::vector<ObjId> chosen(tclasses.num_classes(), -1);
  bool consistent = true;
  for (ObjId ambient : r.source.obj_map) {
    const ObjId y = f.obj_map[ambient];
    ObjId& slot = chosen[tclasses.class_of[y]];
    if (slot < 0)
      slot = y;
    else if (slot != y)
      consistent = false;
  }
  std::vector<bool> keep(tc.num_objects(), false);
  if (consistent) {
    for (std::size_t k = 0; k < chosen.size(); ++k)
      keep[chosen[k] >= 0 ? chosen[k] : tclasses.representative(k)] = true;
  } else {
    std::fill(keep.begin(), keep.end(), true);
  }
  r.target = full_subcategory(tc, [&](ObjId y) { return keep[y]; });
  r.target_reduced = r.target.category.num_objects() < tc.num_objects();
  std::vector<ObjId> tobj(tc.num_objects(), -1);
  for (std::size_t i = 0; i < r.target.obj_map.size(); ++i) tobj[r.target.obj_map[i]] = static_cast<ObjId>(i);
  std::vector<MorId> tmor(tc.num_morphisms(), -1);
  for (std::size_t i = 0; i < r.target.mor_map.size(); ++i) tmor[r.target.mor_map[i]] = static_cast<MorId>(i);
  for (ObjId ambient : r.source.obj_map) r.obj_map.push_back(tobj[f.obj_map[ambient]]);
  for (MorId ambient : r.source.mor_map) r.mor_map.push_back(tmor[f.mor_map[ambient]]);
  return r;
}

// rank of the cone coboundary in degrees 0..dmax. Cone_n = A_{n-1} + C_n,
// A simplices untagged, C simplices tagged with the top bit.
template <class Ops>
std::vector<std::size_t> cone_ranks(const Nerve& a, const Nerve& c, const std::vector<ObjId>& obj_map,
                                    const std::vector<MorId>& mor_map, int dmax, const Ops& ops) {
  // preimage lists per degree: (key in C, key in A), sorted
  std::vector<std::vector<std::pair<ChainKey, ChainKey>>> pre(dmax + 1);
  std::vector<MorId> image;
  for (int n = 0; n <= dmax; ++n) {
    for (std::size_t i = 0; i < a.size(n); ++i) {
      ChainKey ck;
      if (n == 0) {
        ck = ChainKey(obj_map[i]);
      } else {
        image.clear();
        const MorId* f = a.chain(n, i);
        bool degenerate = false;
        for (int k = 0; k < n && !degenerate; ++k) {
          const MorId g = mor_map[f[k]];
          degenerate = c.cat().is_identity(g);
          image.push_back(g);
        }
        if (degenerate) continue;
        ck = c.key(image.data(), n);
      }
      pre[n].emplace_back(ck, a.level(n).keys[i]);
    }
    std::sort(pre[n].begin(), pre[n].end());
  }

  std::vector<std::size_t> ranks;
  std::unordered_set<ChainKey, ChainKeyHash> cleared;
  std::vector<std::pair<ChainKey, int>> raw;
  for (int n = 0; n <= dmax; ++n) {
    ColumnReducer<Ops> red(ops);
    std::unordered_set<ChainKey, ChainKeyHash> pivots;
    if (n >= 1) {
      const auto& lvl = a.level(n - 1);
      for (std::size_t i = 0; i < lvl.keys.size(); ++i) {
        if (cleared.count(lvl.keys[i])) continue;
        a.cofaces(n - 1, i, raw);
        if (auto p = red.insert(make_column(ops, raw, 0, -1))) pivots.insert(*p);
      }
    }
    const auto& lvl = c.level(n);
    for (std::size_t i = 0; i < lvl.keys.size(); ++i) {
      const ChainKey self = lvl.keys[i];
      if (cleared.count(self | kConeTag)) continue;
      c.cofaces(n, i, raw);
      for (auto& e : raw) e.first |= kConeTag;
      auto it = std::lower_bound(pre[n].begin(), pre[n].end(), std::make_pair(self, ChainKey(0)));
      for (; it != pre[n].end() && it->first == self; ++it) raw.emplace_back(it->second, 1);
      if (auto p = red.insert(make_column(ops, raw))) pivots.insert(*p);
    }
    ranks.push_back(red.rank());
    cleared.swap(pivots);
  }
  return ranks;
}

}  // namespace

InducedMapResult induced_map(const FunctorMap& f, const NerveOptions& opt) {
  InducedMapResult r;
  r.prime = opt.prime;
  r.dmax = opt.dmax;
  const int dmax = opt.dmax;

  NerveOptions sub = opt;
  const BettiResult bs = betti(*f.source, sub);
  const BettiResult bt = betti(*f.target, sub);
  r.source_betti = bs.betti;
  r.target_betti = bt.betti;
  for (auto v : bs.chains) r.chains += v;
  for (auto v : bt.chains) r.chains += v;

  if (f.source->empty()) {
    r.rank.assign(dmax + 1, 0);
  } else if (opt.use_shortcut && bs.shortcut && bt.shortcut) {
    r.rank = point_betti(dmax);
  } else {
    ReducedFunctor rf;
    const FiniteCategory* a_cat = f.source.get();
    const FiniteCategory* c_cat = f.target.get();
    const std::vector<ObjId>* om = &f.obj_map;
    const std::vector<MorId>* mm = &f.mor_map;
    if (opt.use_skeleton) {
      rf = reduce_to_skeleta(f);
      a_cat = &rf.source.category;
      c_cat = &rf.target.category;
      om = &rf.obj_map;
      mm = &rf.mor_map;
      r.skeleton = true;
    }
    const int bits = std::max(key_bits(a_cat->num_morphisms()), key_bits(c_cat->num_morphisms()));
    check_key_width(bits, dmax + 1);
    const auto used = check_budget(*a_cat, dmax, opt.budget);
    check_budget(*c_cat, dmax, opt.budget, used);
    Nerve a(*a_cat, bits), c(*c_cat, bits);
    a.enumerate(dmax);
    c.enumerate(dmax);
    const auto ranks = with_ops(opt.prime, [&](auto ops) { return cone_ranks(a, c, *om, *mm, dmax, ops); });
    long long prev = 0;
    for (int n = 0; n <= dmax; ++n) {
      const long long cone_dim = static_cast<long long>(c.size(n)) + (n > 0 ? static_cast<long long>(a.size(n - 1)) : 0);
      const long long h = cone_dim - static_cast<long long>(ranks[n]) - (n > 0 ? static_cast<long long>(ranks[n - 1]) : 0);
      const long long below = n > 0 ? r.source_betti[n - 1] : 0;
      const long long rn = r.target_betti[n] + below - prev - h;
      r.rank.push_back(rn);
      prev = rn;
    }
  }
  r.iso = true;
  for (int n = 0; n <= dmax; ++n)
    if (r.source_betti[n] != r.target_betti[n] || r.rank[n] != r.source_betti[n]) r.iso = false;
  return r;
}

std::size_t boundary_squared_violations(const FiniteCategory& c, int max_degree) {
  if (c.empty()) return 0;
  // a simplex is an object (empty list) or a composable list of morphisms
  using Simplex = std::pair<ObjId, std::vector<MorId>>;
  auto faces = [&](const Simplex& s, std::map<Simplex, long>& out, long mult) {
    const auto& f = s.second;
    const int n = static_cast<int>(f.size());
    if (n == 0) return;
    if (n == 1) {
      out[{c.cod(f[0]), {}}] += mult;
      out[{c.dom(f[0]), {}}] -= mult;
      return;
    }
    for (int i = 0; i <= n; ++i) {
      std::vector<MorId> face;
      bool degenerate = false;
      for (int k = 0; k < n; ++k) {
        if ((i == 0 && k == 0) || (i == n && k == n - 1)) continue;
        if (i > 0 && i < n && k == i - 1) {
          const MorId g = c.comp(f[k], f[k + 1]);
          degenerate = c.is_identity(g);
          face.push_back(g);
          ++k;
          continue;
        }
        face.push_back(f[k]);
      }
      if (degenerate) continue;
      out[{-1, face}] += i % 2 == 0 ? mult : -mult;
    }
  };
  const int bits = key_bits(c.num_morphisms());
  check_budget(c, max_degree, default_chain_budget());
  Nerve nv(c, bits);
  nv.enumerate(max_degree);
  std::size_t bad = 0;
  for (int n = 2; n <= max_degree; ++n) {
    for (std::size_t i = 0; i < nv.size(n); ++i) {
      const MorId* f = nv.chain(n, i);
      std::map<Simplex, long> first, second;
      faces({-1, std::vector<MorId>(f, f + n)}, first, 1);
      for (const auto& [s, m] : first)
        if (m != 0) faces(s, second, m);
      bool zero = true;
      for (const auto& [s, m] : second) zero = zero && m == 0;
      if (!zero) ++bad;
    }
  }
  return bad;
}

long long nerve_euler_characteristic(const FiniteCategory& c) {
  const int top = static_cast<int>(c.num_objects());
  const auto counts = chain_counts(c, top);
  if (top > 0 && counts[top] != 0)
    throw Error(ErrorCode::PreconditionViolated, "nerve has nondegenerate simplices in every degree");
  long long chi = 0;
  for (int n = 0; n <= top; ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[n]);
  return chi;
}

nlohmann::json betti_json(const BettiResult& b) {
  return {{"field", field_name(b.prime)}, {"dmax", b.dmax},         {"betti", b.betti},
          {"reduced", b.reduced()},      {"chains", b.chains},      {"shortcut", b.shortcut},
          {"skeleton", b.skeleton}};
}

nlohmann::json induced_map_json(const InducedMapResult& r) {
  return {{"field", field_name(r.prime)},  {"dmax", r.dmax}, {"source_betti", r.source_betti},
          {"target_betti", r.target_betti}, {"rank", r.rank}, {"iso", r.iso},
          {"skeleton", r.skeleton},         {"chains", r.chains}};
}

}  // namespace pcat
