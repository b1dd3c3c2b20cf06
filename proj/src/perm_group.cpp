#include "pcat/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "pcat/error.hpp"

namespace pcat {

namespace {

struct ImagesHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

constexpr std::size_t kCayleyTableLimit = 2048;

}  // namespace

PermGroup PermGroup::enumerate(std::span<const Permutation> generators, int degree, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& s : generators) {
    if (s.degree() != degree) throw Error(ErrorCode::InvalidPermutation, "generator degree mismatch");
    g.generators_.push_back(s);
  }

  std::unordered_set<Permutation, ImagesHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : g.generators_) {
      Permutation y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::CapExceeded, "group order exceeds element cap " + std::to_string(cap));
        }
        queue.push_back(std::move(y));
      }
    }
  }
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());

  const auto n = g.elements_.size();
  if (n <= kCayleyTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = g.index_of(g.elements_[a] * g.elements_[b]);
  }
  g.inverse_.resize(n);
  g.element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.inverse_[a] = g.index_of(g.elements_[a].inverse());
    int order = 1;
    ElemId x = static_cast<ElemId>(a);
    while (x != identity()) {
      x = g.mul(x, static_cast<ElemId>(a));
      ++order;
    }
    g.element_order_[a] = order;
  }
  return g;
}

ElemId PermGroup::mul(ElemId a, ElemId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_of(elements_[a] * elements_[b]);
}

ElemId PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<ElemId>(it - elements_.begin());
}

Subgroup::Subgroup(std::vector<ElemId> members, std::size_t ambient_order)
    : members_(std::move(members)), mask_(ambient_order, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (ElemId x : members_) mask_[x] = 1;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  for (ElemId x : members_)
    if (!other.contains(x)) return false;
  return true;
}

Subgroup closure(const PermGroup& g, std::span<const ElemId> generators) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<ElemId> members{PermGroup::identity()};
  in[PermGroup::identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElemId s : generators) {
      ElemId y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(std::move(members), g.order());
}

Subgroup trivial_subgroup(const PermGroup& g) { return Subgroup({PermGroup::identity()}, g.order()); }

Subgroup whole_group(const PermGroup& g) {
  std::vector<ElemId> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(all), g.order());
}

Subgroup conjugate(const PermGroup& g, const Subgroup& h, ElemId x) {
  std::vector<ElemId> out;
  out.reserve(h.order());
  for (ElemId y : h.members()) out.push_back(g.conj(y, x));
  return Subgroup(std::move(out), g.order());
}

Subgroup intersection(const PermGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<ElemId> out;
  for (ElemId x : a.members())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(std::move(out), g.order());
}

std::vector<ElemId> generators_of(const PermGroup& g, const Subgroup& h) {
  std::vector<ElemId> gens;
  Subgroup current = trivial_subgroup(g);
  // Prefer high-order elements so cyclic groups get a single generator.
  std::vector<ElemId> order(h.members().begin(), h.members().end());
  std::stable_sort(order.begin(), order.end(),
                   [&](ElemId a, ElemId b) { return g.element_order(a) > g.element_order(b); });
  for (ElemId x : order) {
    if (current.order() == h.order()) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  return gens;
}

Subgroup join(const PermGroup& g, const Subgroup& a, const Subgroup& b) {
  auto gens = generators_of(g, a);
  for (ElemId x : generators_of(g, b)) gens.push_back(x);
  return closure(g, gens);
}

Subgroup centralizer_in(const PermGroup& g, const Subgroup& k, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  std::vector<ElemId> out;
  for (ElemId x : k.members()) {
    bool ok = true;
    for (ElemId s : gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(std::move(out), g.order());
}

Subgroup normalizer_in(const PermGroup& g, const Subgroup& k, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  std::vector<ElemId> out;
  for (ElemId x : k.members()) {
    bool ok = true;
    for (ElemId s : gens)
      if (!h.contains(g.conj(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(std::move(out), g.order());
}

Subgroup centralizer(const PermGroup& g, const Subgroup& h) { return centralizer_in(g, whole_group(g), h); }
Subgroup normalizer(const PermGroup& g, const Subgroup& h) { return normalizer_in(g, whole_group(g), h); }

std::vector<ElemId> transporter(const PermGroup& g, const Subgroup& h, const Subgroup& k) {
  std::vector<ElemId> out;
  if (k.order() % h.order() != 0) return out;
  const auto gens = generators_of(g, h);
  for (ElemId x = 0; x < static_cast<ElemId>(g.order()); ++x) {
    bool ok = true;
    for (ElemId s : gens)
      if (!k.contains(g.conj(s, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

bool is_normal_in(const PermGroup& g, const Subgroup& n, const Subgroup& k) {
  if (!n.is_subset_of(k)) return false;
  const auto gens = generators_of(g, n);
  for (ElemId x : generators_of(g, k))
    for (ElemId s : gens)
      if (!n.contains(g.conj(s, x))) return false;
  return true;
}

bool is_abelian(const PermGroup& g, const Subgroup& h) {
  const auto gens = generators_of(g, h);
  for (ElemId a : gens)
    for (ElemId b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const PermGroup& g, const Subgroup& h) {
  for (ElemId x : h.members())
    if (static_cast<std::size_t>(g.element_order(x)) == h.order()) return true;
  return false;
}

int exponent(const PermGroup& g, const Subgroup& h) {
  int e = 1;
  for (ElemId x : h.members()) e = std::lcm(e, g.element_order(x));
  return e;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_p_power(std::size_t n, int p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

Subgroup center(const PermGroup& g, const Subgroup& h) { return centralizer_in(g, h, h); }

std::vector<Subgroup> all_subgroups(const PermGroup& g, const Subgroup& h, std::size_t cap) {
  std::set<std::vector<ElemId>> seen;
  std::vector<Subgroup> out{trivial_subgroup(g)};
  seen.insert({PermGroup::identity()});
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElemId x : h.members()) {
      if (out[i].contains(x)) continue;
      const ElemId one[] = {x};
      Subgroup next = join(g, out[i], closure(g, one));
      std::vector<ElemId> key(next.members().begin(), next.members().end());
      if (seen.insert(std::move(key)).second) {
        if (out.size() >= cap) throw Error(ErrorCode::CapExceeded, "subgroup count exceeds cap");
        out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup frattini(const PermGroup& g, const Subgroup& h) {
  Subgroup phi = h;
  for (const auto& m : all_subgroups(g, h)) {
    if (m.order() == h.order()) continue;
    // m is maximal iff no proper subgroup of h strictly contains it; index p
    // suffices for p-groups but the general test is cheap at this scale.
    bool maximal = true;
    for (ElemId x : h.members()) {
      if (m.contains(x)) continue;
      const ElemId one[] = {x};
      if (join(g, m, closure(g, one)).order() != h.order()) {
        maximal = false;
        break;
      }
    }
    if (maximal) phi = intersection(g, phi, m);
  }
  return phi;
}

Subgroup sylow(const PermGroup& g, const Subgroup& k, int p) {
  Subgroup current = trivial_subgroup(g);
  for (;;) {
    const Subgroup n = normalizer_in(g, k, current);
    ElemId pick = -1;
    for (ElemId x : n.members()) {
      if (!current.contains(x) && is_p_power(static_cast<std::size_t>(g.element_order(x)), p)) {
        pick = x;
        break;
      }
    }
    if (pick < 0) return current;
    const ElemId one[] = {pick};
    current = join(g, current, closure(g, one));
  }
}

Subgroup sylow(const PermGroup& g, int p, bool strict) {
  if (strict && g.order() % static_cast<std::size_t>(p) != 0) {
    throw Error(ErrorCode::PreconditionViolated, "p does not divide the group order");
  }
  return sylow(g, whole_group(g), p);
}

std::vector<Subgroup> all_sylows(const PermGroup& g, const Subgroup& k, int p) {
  const Subgroup s = sylow(g, k, p);
  std::set<Subgroup> found;
  for (ElemId x : k.members()) found.insert(conjugate(g, s, x));
  return {found.begin(), found.end()};
}

Subgroup o_p(const PermGroup& g, const Subgroup& k, int p) {
  auto sylows = all_sylows(g, k, p);
  Subgroup out = sylows.front();
  for (const auto& s : sylows) out = intersection(g, out, s);
  return out;
}

Subgroup o_upper_p(const PermGroup& g, const Subgroup& k, int p) {
  std::vector<ElemId> gens;
  for (ElemId x : k.members())
    if (g.element_order(x) % p != 0) gens.push_back(x);
  return closure(g, gens);
}

QuotientGroup quotient_group(const PermGroup& g, const Subgroup& k, const Subgroup& n) {
  if (!is_normal_in(g, n, k)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");

  // Right cosets Nx, identified by their least element.
  std::vector<ElemId> coset_of(g.order(), -1);
  std::vector<ElemId> reps;
  for (ElemId x : k.members()) {
    if (coset_of[x] >= 0) continue;
    const auto idx = static_cast<ElemId>(reps.size());
    reps.push_back(x);
    for (ElemId m : n.members()) coset_of[g.mul(m, x)] = idx;
  }
  const int degree = static_cast<int>(reps.size());
  auto action = [&](ElemId y) {
    std::vector<int> images(degree);
    for (int c = 0; c < degree; ++c) images[c] = coset_of[g.mul(reps[c], y)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElemId y : generators_of(g, k)) gens.push_back(action(y));
  QuotientGroup q{PermGroup::enumerate(gens, degree), std::vector<ElemId>(g.order(), -1), {}};
  q.lift.assign(q.group.order(), -1);
  for (ElemId x : k.members()) {
    const ElemId image = q.group.index_of(action(x));
    q.projection[x] = image;
    if (q.lift[image] < 0) q.lift[image] = x;
  }
  return q;
}

}  // namespace pcat
