#include "pcat/p_subgroups.hpp"

#include <algorithm>
#include <set>

#include "pcat/error.hpp"

namespace pcat {

SubgroupAttributes classify(const PermGroup& g, int p, const Subgroup& h) {
  SubgroupAttributes a;
  a.order = h.order();
  a.is_cyclic = is_cyclic(g, h);
  a.is_eab = !h.is_trivial() && is_abelian(g, h) && exponent(g, h) == p;

  const Subgroup n = normalizer(g, h);
  a.is_G_radical = o_p(g, n, p) == h;

  const Subgroup c = centralizer(g, h);
  a.is_G_selfcentralizing = center(g, h).order() == p_part(c.order(), p);

  // C_G(H)\N_G(H)/H = N_G(H) / (H C_G(H)); H and C_G(H) are both normal in N_G(H).
  const QuotientGroup q = quotient_group(g, n, join(g, h, c));
  a.is_F_radical = o_p(q.group, whole_group(q.group), p).is_trivial();
  return a;
}

std::size_t PSubgroupLattice::find(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h);
  if (it == subgroups_.end() || *it != h) return size();
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> PSubgroupLattice::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < size() && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  return edges;
}

PSubgroupLattice enumerate_p_subgroups(const PermGroup& g, int p, std::size_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::PreconditionViolated, "p must be prime");
  const Subgroup syl = sylow(g, p);

  std::set<Subgroup> found;
  std::vector<Subgroup> queue{trivial_subgroup(g)};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElemId x : syl.members()) {
      if (queue[i].contains(x)) continue;
      const ElemId one[] = {x};
      Subgroup next = join(g, queue[i], closure(g, one));
      if (found.insert(next).second) {
        if (found.size() > cap) throw Error(ErrorCode::CapExceeded, "p-subgroup count exceeds cap");
        queue.push_back(std::move(next));
      }
    }
  }
  for (const auto& h : queue)
    for (ElemId x = 0; x < static_cast<ElemId>(g.order()); ++x) {
      if (found.insert(conjugate(g, h, x)).second && found.size() > cap) {
        throw Error(ErrorCode::CapExceeded, "p-subgroup count exceeds cap");
      }
    }

  PSubgroupLattice lat;
  lat.prime_ = p;
  lat.group_order_ = g.order();
  lat.subgroups_.assign(found.begin(), found.end());
  const std::size_t n = lat.subgroups_.size();

  lat.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      lat.leq_[a * n + b] = lat.subgroups_[a].is_subset_of(lat.subgroups_[b]) ? 1 : 0;

  lat.conj_table_.assign(n * g.order(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (ElemId x = 0; x < static_cast<ElemId>(g.order()); ++x)
      lat.conj_table_[i * g.order() + x] = lat.find(conjugate(g, lat.subgroups_[i], x));

  lat.class_of_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lat.class_of_[i] != n) continue;
    std::vector<std::size_t> cls;
    for (ElemId x = 0; x < static_cast<ElemId>(g.order()); ++x) cls.push_back(lat.conjugate_index(i, x));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (std::size_t j : cls) lat.class_of_[j] = lat.classes_.size();
    lat.classes_.push_back(std::move(cls));
  }

  lat.attrs_.reserve(n);
  for (const auto& h : lat.subgroups_) lat.attrs_.push_back(classify(g, p, h));
  lat.sylow_index_ = lat.find(syl);
  return lat;
}

MobiusTable::MobiusTable(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.size();
  mu_.assign(n, std::vector<long long>(n, 0));
  // Interval sizes give a linear extension: b after every c < b.
  std::vector<std::size_t> order(n);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      if (leq_[c][b]) ++below[b];
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b : order) {
      if (!leq_[a][b]) continue;
      if (a == b) {
        mu_[a][b] = 1;
        continue;
      }
      long long sum = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != b && leq_[a][c] && leq_[c][b]) sum += mu_[a][c];
      mu_[a][b] = -sum;
    }
  }
}

long long MobiusTable::operator()(std::size_t a, std::size_t b) const {
  if (!leq_[a][b]) throw Error(ErrorCode::NotComparable, "mobius(a, b) needs a <= b");
  return mu_[a][b];
}

long long mobius(const std::vector<std::vector<bool>>& leq, std::size_t bottom, std::size_t top) {
  if (!leq[bottom][top]) throw Error(ErrorCode::NotComparable, "mobius(a, b) needs a <= b");
  // Recursion restricted to the interval [bottom, top].
  std::vector<std::size_t> interval;
  for (std::size_t c = 0; c < leq.size(); ++c)
    if (leq[bottom][c] && leq[c][top]) interval.push_back(c);
  std::vector<std::vector<bool>> sub(interval.size(), std::vector<bool>(interval.size()));
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (interval[i] == bottom) lo = i;
    if (interval[i] == top) hi = i;
    for (std::size_t j = 0; j < interval.size(); ++j) sub[i][j] = leq[interval[i]][interval[j]];
  }
  return MobiusTable(std::move(sub))(lo, hi);
}

std::vector<std::vector<bool>> order_relation(const PSubgroupLattice& lattice) {
  std::vector<std::vector<bool>> leq(lattice.size(), std::vector<bool>(lattice.size()));
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = 0; b < lattice.size(); ++b) leq[a][b] = lattice.leq(a, b);
  return leq;
}

SelfCentralizingCheck f_selfcentralizing(const PermGroup& g, int p, const Subgroup& sylow_p, const Subgroup& h) {
  if (!h.is_subset_of(sylow_p) || sylow_p.order() != p_part(g.order(), p)) {
    throw Error(ErrorCode::PreconditionViolated, "need H <= P with P a Sylow p-subgroup");
  }
  SelfCentralizingCheck out;
  out.f_selfcentralizing = true;
  for (ElemId x : transporter(g, h, sylow_p)) {
    const Subgroup image = conjugate(g, h, x);
    if (!centralizer_in(g, sylow_p, image).is_subset_of(image)) {
      out.f_selfcentralizing = false;
      break;
    }
  }
  out.g_selfcentralizing = classify(g, p, h).is_G_selfcentralizing;
  if (out.f_selfcentralizing != out.g_selfcentralizing) {
    throw Error(ErrorCode::EquivalenceViolation, "F- and G-selfcentralizing bits disagree");
  }
  return out;
}

}  // namespace pcat
