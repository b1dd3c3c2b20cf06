#include "pcat/spectral.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pcat/error.hpp"
#include "pcat/field.hpp"
#include "pcat/linalg.hpp"
#include "pcat/nerve.hpp"
#include "pcat/subgroup_categories.hpp"

namespace pcat {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

GroupTable elementary_abelian_table(int p, int r) {
  if (!is_prime(p) || r < 0) throw Error(ErrorCode::PreconditionViolated, "need a prime and a nonnegative rank");
  GroupTable g;
  g.order = ipow(p, r);
  g.table.assign(static_cast<std::size_t>(g.order) * g.order, 0);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      int x = a, y = b, sum = 0, place = 1;
      for (int i = 0; i < r; ++i) {
        sum += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      g.table[static_cast<std::size_t>(a) * g.order + b] = sum;
    }
  return g;
}

GroupTable group_table(const PermGroup& g) {
  GroupTable t;
  t.order = static_cast<int>(g.order());
  t.table.resize(static_cast<std::size_t>(t.order) * t.order);
  for (int a = 0; a < t.order; ++a)
    for (int b = 0; b < t.order; ++b) t.table[static_cast<std::size_t>(a) * t.order + b] = g.mul(a, b);
  return t;
}

PermGroup elementary_abelian_group(int p, int r) {
  std::vector<Permutation> gens;
  for (int i = 0; i < r; ++i) {
    std::vector<int> images(static_cast<std::size_t>(r) * p);
    for (int x = 0; x < r * p; ++x) images[x] = x;
    for (int k = 0; k < p; ++k) images[i * p + k] = i * p + (k + 1) % p;
    gens.emplace_back(std::move(images));
  }
  return PermGroup::enumerate(gens, std::max(1, r * p));
}

namespace {

// a += f * b over F_p, both sorted by key
void add_scaled(const ModPOps& ops, FpColumn& a, std::uint32_t f, const FpColumn& b) {
  if (f == 0) return;
  FpColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      out.push_back({b[j].key, ops.mul(f, b[j].coef)});
      ++j;
    } else {
      const auto c = ops.add(a[i].coef, ops.mul(f, b[j].coef));
      if (c != 0) out.push_back({a[i].key, c});
      ++i;
      ++j;
    }
  }
  a.swap(out);
}

void scale(const ModPOps& ops, FpColumn& a, std::uint32_t f) {
  for (auto& e : a) e.coef = ops.mul(e.coef, f);
}

// Calls visit(tuple) for every tuple of nonidentity elements, in increasing
// lexicographic order.
template <class F>
void for_each_tuple(int order, int t, F&& visit) {
  if (order < 2 && t > 0) return;
  std::vector<int> tuple(t, 1);
  while (true) {
    visit(std::span<const int>(tuple));
    int i = t - 1;
    while (i >= 0 && tuple[i] == order - 1) tuple[i--] = 1;
    if (i < 0) return;
    ++tuple[i];
  }
}

}  // namespace

std::vector<long long> BarModel::dims() const {
  std::vector<long long> out;
  for (int t = 0; t <= tmax_; ++t) out.push_back(dim(t));
  return out;
}

ChainKey BarModel::key(std::span<const int> tuple) const {
  ChainKey k = 0;
  for (int w : tuple) k = (k << bits_) | ChainKey(static_cast<unsigned>(w));
  return k;
}

std::vector<int> BarModel::decode(ChainKey key, int t) const {
  std::vector<int> tuple(t);
  const ChainKey mask = (ChainKey(1) << bits_) - 1;
  for (int i = t - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(key & mask);
    key >>= bits_;
  }
  return tuple;
}

FpColumn BarModel::boundary(std::span<const int> tuple) const {
  const ModPOps ops{static_cast<std::uint32_t>(prime_)};
  const int t = static_cast<int>(tuple.size());
  FpColumn col;
  if (t == 0) return col;
  std::vector<int> face;
  face.assign(tuple.begin() + 1, tuple.end());
  col.push_back({key(face), 1});
  for (int i = 1; i < t; ++i) {
    const int prod = group_.mul(tuple[i - 1], tuple[i]);
    if (prod == 0) continue;
    face.clear();
    for (int k = 0; k < t; ++k) {
      if (k == i - 1) {
        face.push_back(prod);
        ++k;
        continue;
      }
      face.push_back(tuple[k]);
    }
    col.push_back({key(face), ops.from_int(i % 2 == 0 ? 1 : -1)});
  }
  face.assign(tuple.begin(), tuple.end() - 1);
  col.push_back({key(face), ops.from_int(t % 2 == 0 ? 1 : -1)});
  canonicalize(ops, col);
  return col;
}

BarModel BarModel::build(GroupTable w, int p, int tmax, std::size_t budget) {
  if (tmax < 0) throw Error(ErrorCode::PreconditionViolated, "tmax must be nonnegative");
  BarModel m;
  m.group_ = std::move(w);
  m.prime_ = p;
  m.tmax_ = tmax;
  m.bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(m.group_.order - 1))));
  if (m.bits_ * (tmax + 1) > 126) throw Error(ErrorCode::BudgetExceeded, "bar tuples do not fit a 126-bit key");
  double top = 1;
  for (int i = 0; i <= tmax; ++i) top *= std::max(1, m.group_.order - 1);
  if (top > static_cast<double>(budget))
    throw Error(ErrorCode::BudgetExceeded, "bar complex needs " + std::to_string(static_cast<long long>(top)) +
                                               " tuples in degree " + std::to_string(tmax + 1));
  const ModPOps ops{static_cast<std::uint32_t>(p)};
  m.degrees_.resize(tmax + 1);

  // reduce d_t into degrees_[t-1] for t = tmax+1 down to 1; zero columns of
  // d_t (t <= tmax) give cycle candidates via the tracked combinations
  std::vector<std::vector<FpColumn>> cycles(tmax + 1);
  cycles[0].push_back({{ChainKey(0), 1}});
  for (int t = tmax + 1; t >= 1; --t) {
    Degree& target = m.degrees_[t - 1];
    const bool track = t <= tmax;
    const Degree* cleared = track ? &m.degrees_[t] : nullptr;
    std::vector<FpColumn> combos;  // per stored column of target, when tracking
    for_each_tuple(m.group_.order, t, [&](std::span<const int> tuple) {
      const ChainKey self = m.key(tuple);
      if (cleared && cleared->pivot.count(self)) return;
      FpColumn col = m.boundary(tuple);
      FpColumn combo;
      if (track) combo.push_back({self, 1});
      while (!col.empty()) {
        auto it = target.pivot.find(col.back().key);
        if (it == target.pivot.end()) break;
        const std::uint32_t f = ops.neg(col.back().coef);
        add_scaled(ops, col, f, target.stored[it->second].column);
        if (track) add_scaled(ops, combo, f, combos[it->second]);
      }
      if (col.empty()) {
        if (track) cycles[t].push_back(std::move(combo));
        return;
      }
      const std::uint32_t inv = ops.inv(col.back().coef);
      scale(ops, col, inv);
      if (track) {
        scale(ops, combo, inv);
        combos.push_back(std::move(combo));
      }
      target.pivot.emplace(col.back().key, target.stored.size());
      target.stored.push_back({std::move(col), -1});
    });
  }

  for (int t = 0; t <= tmax; ++t) {
    Degree& d = m.degrees_[t];
    for (FpColumn& z : cycles[t]) {
      while (!z.empty()) {
        auto it = d.pivot.find(z.back().key);
        if (it == d.pivot.end()) break;
        add_scaled(ops, z, ops.neg(z.back().coef), d.stored[it->second].column);
      }
      if (z.empty()) continue;
      scale(ops, z, ops.inv(z.back().coef));
      d.pivot.emplace(z.back().key, d.stored.size());
      d.stored.push_back({z, static_cast<int>(d.reps.size())});
      d.reps.push_back(std::move(z));
    }
  }
  return m;
}

std::vector<std::uint32_t> BarModel::coordinates(int t, FpColumn c) const {
  const ModPOps ops{static_cast<std::uint32_t>(prime_)};
  const Degree& d = degrees_[t];
  std::vector<std::uint32_t> coords(d.reps.size(), 0);
  canonicalize(ops, c);
  while (!c.empty()) {
    auto it = d.pivot.find(c.back().key);
    if (it == d.pivot.end()) throw Error(ErrorCode::PreconditionViolated, "column is not a cycle");
    const std::uint32_t f = c.back().coef;
    const Stored& s = d.stored[it->second];
    if (s.basis >= 0) coords[s.basis] = ops.add(coords[s.basis], f);
    add_scaled(ops, c, ops.neg(f), s.column);
  }
  return coords;
}

FpMatrix induced_bar_map(const BarModel& source, const BarModel& target, const std::vector<int>& hom, int t) {
  if (source.prime() != target.prime()) throw Error(ErrorCode::PreconditionViolated, "bar models over different primes");
  const auto& reps = source.representatives(t);
  FpMatrix m = FpMatrix::Zero(target.dim(t), source.dim(t));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    FpColumn image;
    for (const auto& e : reps[k]) {
      auto tuple = source.decode(e.key, t);
      bool degenerate = false;
      for (int& w : tuple) {
        w = hom[w];
        degenerate = degenerate || w == 0;
      }
      if (!degenerate) image.push_back({target.key(tuple), e.coef});
    }
    const auto coords = target.coordinates(t, std::move(image));
    for (std::size_t i = 0; i < coords.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = coords[i];
  }
  return m;
}

SubspaceLattice subspaces(int p, int r) {
  SubspaceLattice lat;
  lat.p = p;
  lat.r = r;
  lat.order = ipow(p, r);
  if (lat.order > 64) throw Error(ErrorCode::PreconditionViolated, "(Z/p)^r must have at most 64 elements");
  const GroupTable v = elementary_abelian_table(p, r);
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> todo{1};
  while (!todo.empty()) {
    const std::uint64_t m = todo.back();
    todo.pop_back();
    for (int x = 1; x < v.order; ++x) {
      if (m >> x & 1) continue;
      std::uint64_t span = m;
      std::vector<int> members;
      for (int a = 0; a < v.order; ++a)
        if (m >> a & 1) members.push_back(a);
      int multiple = 0;
      for (int k = 1; k < p; ++k) {
        multiple = v.mul(multiple, x);
        for (int a : members) span |= std::uint64_t(1) << v.mul(a, multiple);
      }
      if (seen.insert(span).second) todo.push_back(span);
    }
  }
  lat.masks.assign(seen.begin(), seen.end());
  std::sort(lat.masks.begin(), lat.masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (auto m : lat.masks) lat.sizes.push_back(std::popcount(m));
  return lat;
}

QuotientTable quotient_table(const GroupTable& v, std::uint64_t l_mask) {
  QuotientTable q;
  std::vector<int> members;
  for (int a = 0; a < v.order; ++a)
    if (l_mask >> a & 1) members.push_back(a);
  std::vector<int> least(v.order);
  for (int x = 0; x < v.order; ++x) {
    int best = v.order;
    for (int l : members) best = std::min(best, v.mul(x, l));
    least[x] = best;
  }
  q.rep = least;
  std::sort(q.rep.begin(), q.rep.end());
  q.rep.erase(std::unique(q.rep.begin(), q.rep.end()), q.rep.end());
  q.coset_of.resize(v.order);
  for (int x = 0; x < v.order; ++x)
    q.coset_of[x] = static_cast<int>(std::lower_bound(q.rep.begin(), q.rep.end(), least[x]) - q.rep.begin());
  q.group.order = static_cast<int>(q.rep.size());
  q.group.table.resize(static_cast<std::size_t>(q.group.order) * q.group.order);
  for (int i = 0; i < q.group.order; ++i)
    for (int j = 0; j < q.group.order; ++j)
      q.group.table[static_cast<std::size_t>(i) * q.group.order + j] = q.coset_of[v.mul(q.rep[i], q.rep[j])];
  return q;
}

namespace {

// Everything the E^1 differential needs, independent of the field type.
struct FlagData {
  SubspaceLattice lattice;
  std::vector<std::vector<std::vector<int>>> flags;
  std::vector<std::map<std::vector<int>, std::size_t>> flag_index;
  std::vector<BarModel> bars;                             // per proper subgroup
  std::map<std::pair<int, int>, std::vector<FpMatrix>> maps;  // (L0, L1) -> H_t map per t
};

FlagData flag_data(int r, int p, int tmax, std::size_t budget) {
  FlagData fd;
  fd.lattice = subspaces(p, r);
  const int proper = static_cast<int>(fd.lattice.masks.size()) - 1;
  const GroupTable v = elementary_abelian_table(p, r);
  std::vector<QuotientTable> quotients;
  for (int l = 0; l < proper; ++l) {
    quotients.push_back(quotient_table(v, fd.lattice.masks[l]));
    fd.bars.push_back(BarModel::build(quotients.back().group, p, tmax, budget));
  }
  auto strictly_below = [&](int a, int b) { return a != b && fd.lattice.leq(a, b); };

  fd.flags.emplace_back();
  for (int l = 0; l < proper; ++l) fd.flags[0].push_back({l});
  for (int s = 1; s <= r - 1; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& f : fd.flags[s - 1])
      for (int m = 0; m < proper; ++m)
        if (strictly_below(f.back(), m)) {
          auto g = f;
          g.push_back(m);
          next.push_back(std::move(g));
        }
    std::sort(next.begin(), next.end());
    fd.flags.push_back(std::move(next));
  }
  for (const auto& level : fd.flags) {
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t k = 0; k < level.size(); ++k) idx.emplace(level[k], k);
    fd.flag_index.push_back(std::move(idx));
  }
  for (int a = 0; a < proper; ++a)
    for (int b = 0; b < proper; ++b) {
      if (!strictly_below(a, b)) continue;
      std::vector<int> hom(quotients[a].group.order);
      for (int i = 0; i < quotients[a].group.order; ++i) hom[i] = quotients[b].coset_of[quotients[a].rep[i]];
      std::vector<FpMatrix> per_t;
      for (int t = 0; t <= tmax; ++t) per_t.push_back(induced_bar_map(fd.bars[a], fd.bars[b], hom, t));
      fd.maps.emplace(std::make_pair(a, b), std::move(per_t));
    }
  return fd;
}

template <int P>
void fill_pages(const FlagData& fd, SpectralPages& pages) {
  using S = Zp<P>;
  const int smax = pages.smax;
  for (int t = 0; t <= pages.tmax; ++t) {
    std::vector<std::vector<Eigen::Index>> offset(smax + 1);
    std::vector<Eigen::Index> dim(smax + 1, 0);
    for (int s = 0; s <= smax; ++s) {
      for (const auto& f : fd.flags[s]) {
        offset[s].push_back(dim[s]);
        dim[s] += fd.bars[f.front()].dim(t);
      }
      pages.e1[s][t] = dim[s];
    }
    // d[s] : E^1_{s,t} -> E^1_{s-1,t}
    std::vector<Mat<S>> d(smax + 1);
    for (int s = 1; s <= smax; ++s) {
      d[s] = Mat<S>::Zero(dim[s - 1], dim[s]);
      for (std::size_t k = 0; k < fd.flags[s].size(); ++k) {
        const auto& f = fd.flags[s][k];
        const Eigen::Index src = offset[s][k];
        const Eigen::Index w = fd.bars[f.front()].dim(t);
        for (int i = 0; i <= s; ++i) {
          std::vector<int> face = f;
          face.erase(face.begin() + i);
          const std::size_t target = fd.flag_index[s - 1].at(face);
          const Eigen::Index dst = offset[s - 1][target];
          const S sign = i % 2 == 0 ? S(1) : S(-1);
          if (i == 0) {
            const FpMatrix& m = fd.maps.at({f[0], f[1]})[t];
            for (Eigen::Index r = 0; r < m.rows(); ++r)
              for (Eigen::Index c = 0; c < m.cols(); ++c) d[s](dst + r, src + c) += sign * S(static_cast<long>(m(r, c)));
          } else {
            for (Eigen::Index c = 0; c < w; ++c) d[s](dst + c, src + c) += sign;
          }
        }
      }
    }
    std::vector<int> rk(smax + 2, 0);
    for (int s = 1; s <= smax; ++s) rk[s] = rank<S>(d[s]);
    for (int s = 0; s <= smax; ++s) pages.e2[s][t] = dim[s] - rk[s] - rk[s + 1];
    for (int s = 1; s + 1 <= smax; ++s) {
      const Mat<S> prod = d[s] * d[s + 1];
      for (Eigen::Index i = 0; i < prod.size(); ++i)
        if (!is_zero(prod.data()[i])) pages.d1_squares_to_zero = false;
    }
  }
}

}  // namespace

SpectralPages e1_e2_pages(int rank, int p, int tmax, std::size_t budget) {
  if (rank < 1) throw Error(ErrorCode::PreconditionViolated, "rank must be positive");
  SpectralPages pages;
  pages.rank = rank;
  pages.prime = p;
  pages.smax = rank - 1;
  pages.tmax = tmax;
  const FlagData fd = flag_data(rank, p, tmax, budget);
  pages.flags = fd.flags;
  pages.e1.assign(pages.smax + 1, std::vector<long long>(tmax + 1, 0));
  pages.e2 = pages.e1;
  dispatch_prime(p, [&]<int P>() { fill_pages<P>(fd, pages); });
  return pages;
}

std::vector<AbutmentRow> abutment_check(const SpectralPages& pages, int nmax) {
  if (pages.rank != 2) throw Error(ErrorCode::PreconditionViolated, "degeneration is only known for rank 2");
  if (nmax > pages.tmax) throw Error(ErrorCode::PreconditionViolated, "pages computed only up to t = " + std::to_string(pages.tmax));
  auto ctx = make_context(elementary_abelian_group(pages.prime, pages.rank), pages.prime);
  const auto orbit = build(ctx, Flavor::O, ObjectFilter::interval(true, "1", "P", false));
  NerveOptions opt;
  opt.dmax = nmax;
  opt.prime = pages.prime;
  const auto b = betti(orbit.cat(), opt);
  std::vector<AbutmentRow> rows;
  for (int n = 0; n <= nmax; ++n) {
    AbutmentRow row;
    row.n = n;
    for (int s = 0; s <= std::min(n, pages.smax); ++s) row.e2_total += pages.e2[s][n - s];
    row.betti = b.betti[n];
    row.equal = row.e2_total == row.betti;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConjectureRow> conjecture_rows(const SpectralPages& pages) {
  std::vector<ConjectureRow> rows;
  for (int t = 1; t <= pages.tmax; ++t)
    for (int s = 0; s < pages.rank - 1; ++s)
      rows.push_back({pages.rank, pages.prime, s, t, pages.e2[s][t], pages.e2[s][t] == 0});
  return rows;
}

std::vector<ConjectureRow> conjecture_scan(const std::vector<ScanCase>& cases, std::size_t budget) {
  std::vector<ConjectureRow> rows;
  for (const auto& c : cases) {
    const auto part = conjecture_rows(e1_e2_pages(c.rank, c.prime, c.tmax, budget));
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

nlohmann::json pages_json(const SpectralPages& pages) {
  nlohmann::json j;
  j["rank"] = pages.rank;
  j["prime"] = pages.prime;
  j["smax"] = pages.smax;
  j["tmax"] = pages.tmax;
  j["e1"] = pages.e1;
  j["e2"] = pages.e2;
  auto& counts = j["flag_counts"] = nlohmann::json::array();
  for (const auto& level : pages.flags) counts.push_back(level.size());
  j["d1_squares_to_zero"] = pages.d1_squares_to_zero;
  return j;
}

std::string pages_csv(const SpectralPages& pages) {
  std::ostringstream os;
  os << "s,t,e1,e2\n";
  for (int s = 0; s <= pages.smax; ++s)
    for (int t = 0; t <= pages.tmax; ++t) os << s << ',' << t << ',' << pages.e1[s][t] << ',' << pages.e2[s][t] << '\n';
  return os.str();
}

std::string conjecture_csv(const std::vector<ConjectureRow>& rows) {
  std::ostringstream os;
  os << "rank,prime,s,t,e2,vanishes\n";
  for (const auto& r : rows)
    os << r.rank << ',' << r.prime << ',' << r.s << ',' << r.t << ',' << r.e2 << ',' << (r.vanishes ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace pcat
