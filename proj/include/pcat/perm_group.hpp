#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pcat/permutation.hpp"

namespace pcat {

/// Index into PermGroup::elements().
using ElemId = std::int32_t;

inline constexpr std::size_t kDefaultElementCap = 10000;

/// A finite permutation group with every element enumerated. Elements are
/// sorted by image sequence, so the identity is always element 0.
class PermGroup {
 public:
  PermGroup() = default;

  /// Closure of `generators`. Throws CapExceeded past `cap` elements and
  /// InvalidPermutation on a degree mismatch.
  static PermGroup enumerate(std::span<const Permutation> generators, int degree,
                             std::size_t cap = kDefaultElementCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> generators() const { return generators_; }
  std::span<const Permutation> elements() const { return elements_; }
  const Permutation& element(ElemId id) const { return elements_[id]; }

  static constexpr ElemId identity() { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const { return inverse_[a]; }
  /// x^g = g^-1 x g.
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inv(g), x), g); }
  /// Order of the element as a group element.
  int element_order(ElemId a) const { return element_order_[a]; }

  /// Index of `p`, or -1 if `p` is not in the group.
  ElemId index_of(const Permutation& p) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<ElemId> inverse_;
  std::vector<int> element_order_;
  std::vector<ElemId> table_;  // full Cayley table when the group is small
};

/// A subgroup of some ambient PermGroup, as a sorted list of element ids plus
/// a membership mask. The ambient group is supplied to each operation.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::vector<ElemId> members, std::size_t ambient_order);

  std::span<const ElemId> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(ElemId g) const { return mask_[g] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  /// Set containment.
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() <=> b.order();
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<ElemId> members_;
  std::vector<std::uint8_t> mask_;
};

// Subgroup construction.
Subgroup closure(const PermGroup& g, std::span<const ElemId> generators);
Subgroup trivial_subgroup(const PermGroup& g);
Subgroup whole_group(const PermGroup& g);
Subgroup conjugate(const PermGroup& g, const Subgroup& h, ElemId x);
Subgroup intersection(const PermGroup& g, const Subgroup& a, const Subgroup& b);
/// Subgroup generated by a and b.
Subgroup join(const PermGroup& g, const Subgroup& a, const Subgroup& b);
/// Smallest generating list found greedily, for reporting.
std::vector<ElemId> generators_of(const PermGroup& g, const Subgroup& h);

// Subgroup-theoretic primitives.
Subgroup centralizer(const PermGroup& g, const Subgroup& h);
Subgroup normalizer(const PermGroup& g, const Subgroup& h);
/// Centralizer / normalizer inside a subgroup k rather than the whole group.
Subgroup centralizer_in(const PermGroup& g, const Subgroup& k, const Subgroup& h);
Subgroup normalizer_in(const PermGroup& g, const Subgroup& k, const Subgroup& h);
/// N_G(H,K) = {g | H^g <= K}, sorted.
std::vector<ElemId> transporter(const PermGroup& g, const Subgroup& h, const Subgroup& k);
bool is_normal_in(const PermGroup& g, const Subgroup& n, const Subgroup& k);
bool is_abelian(const PermGroup& g, const Subgroup& h);
bool is_cyclic(const PermGroup& g, const Subgroup& h);
int exponent(const PermGroup& g, const Subgroup& h);

bool is_prime(int p);
bool is_p_power(std::size_t n, int p);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, int p);

Subgroup center(const PermGroup& g, const Subgroup& h);
/// Intersection of the maximal subgroups of h.
Subgroup frattini(const PermGroup& g, const Subgroup& h);
/// All subgroups of h (cyclic-extension enumeration); throws CapExceeded.
std::vector<Subgroup> all_subgroups(const PermGroup& g, const Subgroup& h, std::size_t cap = 20000);

/// One Sylow p-subgroup of k, grown greedily from the trivial group by
/// adjoining the least-index p-element of N_k(P) outside P.
Subgroup sylow(const PermGroup& g, const Subgroup& k, int p);
/// Sylow p-subgroup of the whole group. With `strict`, throws
/// PreconditionViolated when p does not divide |G|.
Subgroup sylow(const PermGroup& g, int p, bool strict = false);
/// All Sylow p-subgroups of k (conjugates of sylow(g, k, p)), sorted.
std::vector<Subgroup> all_sylows(const PermGroup& g, const Subgroup& k, int p);

/// Largest normal p-subgroup of k: the intersection of its Sylow p-subgroups.
Subgroup o_p(const PermGroup& g, const Subgroup& k, int p);
/// Subgroup of k generated by its p'-elements.
Subgroup o_upper_p(const PermGroup& g, const Subgroup& k, int p);

/// K/N as a permutation group on the right cosets of N in K.
struct QuotientGroup {
  PermGroup group;
  /// projection[x] is the quotient element of Nx for x in K, -1 for x outside K.
  std::vector<ElemId> projection;
  /// One coset representative (least element id) per quotient element.
  std::vector<ElemId> lift;
};
/// Throws NotNormal unless n is normal in k.
QuotientGroup quotient_group(const PermGroup& g, const Subgroup& k, const Subgroup& n);

}  // namespace pcat
