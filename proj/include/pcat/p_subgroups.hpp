#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pcat/perm_group.hpp"

namespace pcat {

inline constexpr std::size_t kDefaultSubgroupCap = 20000;

/// Classification bits of one p-subgroup H of G.
struct SubgroupAttributes {
  std::size_t order = 1;
  bool is_eab = false;     // abelian of exponent p (the trivial group is not counted)
  bool is_cyclic = false;
  bool is_G_radical = false;          // O_p(N_G(H)) = H
  bool is_G_selfcentralizing = false; // Z(H) is a Sylow p-subgroup of C_G(H)
  bool is_F_radical = false;          // O_p(C_G(H)\N_G(H)/H) = 1
};

SubgroupAttributes classify(const PermGroup& g, int p, const Subgroup& h);

/// All p-subgroups of G, sorted by (order, member set); index 0 is the trivial
/// subgroup. Conjugacy classes are listed with their least member first.
class PSubgroupLattice {
 public:
  int prime() const { return prime_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  const SubgroupAttributes& attrs(std::size_t i) const { return attrs_[i]; }
  const std::vector<std::vector<std::size_t>>& conj_classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  /// Index of the Sylow subgroup chosen by sylow(G, p).
  std::size_t sylow_index() const { return sylow_index_; }
  /// Index of a subgroup given by member set, or size() if absent.
  std::size_t find(const Subgroup& h) const;
  /// Index of H^x.
  std::size_t conjugate_index(std::size_t i, ElemId x) const { return conj_table_[i * group_order_ + x]; }
  /// Pairs (a, b) with a < b covering relation.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  friend PSubgroupLattice enumerate_p_subgroups(const PermGroup& g, int p, std::size_t cap);

 private:
  int prime_ = 0;
  std::size_t group_order_ = 0;
  std::vector<Subgroup> subgroups_;
  std::vector<std::uint8_t> leq_;
  std::vector<SubgroupAttributes> attrs_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> conj_table_;
  std::size_t sylow_index_ = 0;
};

/// Enumerates the subgroups of one Sylow p-subgroup by adjoining one
/// p-element at a time, then closes under G-conjugation. Throws CapExceeded.
PSubgroupLattice enumerate_p_subgroups(const PermGroup& g, int p, std::size_t cap = kDefaultSubgroupCap);

/// Möbius function of a finite poset given by its order relation
/// (leq[a][b] means a <= b). Throws NotComparable unless bottom <= top.
long long mobius(const std::vector<std::vector<bool>>& leq, std::size_t bottom, std::size_t top);

/// All values μ(a, b) for a <= b in a finite poset.
class MobiusTable {
 public:
  explicit MobiusTable(std::vector<std::vector<bool>> leq);
  /// Throws NotComparable unless a <= b.
  long long operator()(std::size_t a, std::size_t b) const;
  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<long long>> mu_;
};

std::vector<std::vector<bool>> order_relation(const PSubgroupLattice& lattice);

/// Result of checking F-selfcentralization of H <= P against the G-level bit.
struct SelfCentralizingCheck {
  bool f_selfcentralizing = false;
  bool g_selfcentralizing = false;
};

/// C_P(H^g) <= H^g for all g in N_G(H, P). Throws EquivalenceViolation when
/// the result disagrees with the G-selfcentralizing bit, PreconditionViolated
/// unless H <= P and P is Sylow.
SelfCentralizingCheck f_selfcentralizing(const PermGroup& g, int p, const Subgroup& sylow_p, const Subgroup& h);

}  // namespace pcat
