#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcat/perm_group.hpp"
#include "pcat/sparse_reduce.hpp"

namespace pcat {

/// Multiplication table of a small group; element 0 is the identity.
struct GroupTable {
  int order = 1;
  std::vector<int> table{0};

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
};

/// (Z/p)^r with element sum_i d_i p^i written as the integer itself.
GroupTable elementary_abelian_table(int p, int r);
GroupTable group_table(const PermGroup& g);
/// (Z/p)^r acting on r blocks of p points.
PermGroup elementary_abelian_group(int p, int r);

using FpMatrix = Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>;
using FpColumn = SparseColumn<std::uint32_t>;

/// Normalized bar complex of W over F_p in degrees 0..tmax with a homology
/// basis in each degree. Bar tuples use nonidentity elements only.
class BarModel {
 public:
  /// Throws BudgetExceeded when (|W|-1)^(tmax+1) exceeds `budget`.
  static BarModel build(GroupTable w, int p, int tmax, std::size_t budget);

  int prime() const { return prime_; }
  int tmax() const { return tmax_; }
  const GroupTable& group() const { return group_; }
  long long dim(int t) const { return static_cast<long long>(degrees_[t].reps.size()); }
  std::vector<long long> dims() const;

  ChainKey key(std::span<const int> tuple) const;
  std::vector<int> decode(ChainKey key, int t) const;

  /// Boundary of one bar tuple, identity-containing terms dropped.
  FpColumn boundary(std::span<const int> tuple) const;

  /// Cycle representatives of the homology basis in degree t.
  const std::vector<FpColumn>& representatives(int t) const { return degrees_[t].reps; }
  /// Coordinates of a cycle in that basis. Throws PreconditionViolated if the
  /// column is not a cycle.
  std::vector<std::uint32_t> coordinates(int t, FpColumn cycle) const;

 private:
  struct Stored {
    FpColumn column;  // leading coefficient 1
    int basis = -1;   // homology basis index, -1 for a boundary
  };
  struct Degree {
    std::vector<Stored> stored;
    std::unordered_map<ChainKey, std::size_t, ChainKeyHash> pivot;
    std::vector<FpColumn> reps;
  };

  GroupTable group_;
  int prime_ = 2;
  int tmax_ = 0;
  int bits_ = 1;
  std::vector<Degree> degrees_;
};

/// Matrix of H_t(f) in the homology bases, f given by images of elements.
FpMatrix induced_bar_map(const BarModel& source, const BarModel& target, const std::vector<int>& hom, int t);

/// Subgroups of (Z/p)^r as element masks, sorted by (order, mask).
struct SubspaceLattice {
  int p = 2;
  int r = 0;
  int order = 1;
  std::vector<std::uint64_t> masks;
  std::vector<int> sizes;

  bool leq(std::size_t a, std::size_t b) const { return (masks[a] & ~masks[b]) == 0; }
};
SubspaceLattice subspaces(int p, int r);

/// V/L with cosets numbered by increasing least element, plus the projection.
struct QuotientTable {
  GroupTable group;
  std::vector<int> coset_of;  // element of V -> element of V/L
  std::vector<int> rep;       // element of V/L -> least element of the coset
};
QuotientTable quotient_table(const GroupTable& v, std::uint64_t l_mask);

struct SpectralPages {
  int rank = 0;
  int prime = 2;
  int smax = 0;
  int tmax = 0;
  std::vector<std::vector<std::vector<int>>> flags;  // flags[s][k] = (L_0, ..., L_s)
  std::vector<std::vector<long long>> e1;            // e1[s][t]
  std::vector<std::vector<long long>> e2;            // e2[s][t]
  bool d1_squares_to_zero = true;
};

/// E^1 and E^2 of the flag complex of proper subgroups 0 <= L_0 < ... < L_s < V
/// with coefficients H_t(V/L_0; F_p).
SpectralPages e1_e2_pages(int rank, int p, int tmax, std::size_t budget);

struct AbutmentRow {
  int n = 0;
  long long e2_total = 0;
  long long betti = 0;
  bool equal = false;
};
/// Sum of E^2 along s + t = n against b_n of the orbit category O_V[1,V) over F_p.
std::vector<AbutmentRow> abutment_check(const SpectralPages& pages, int nmax);

struct ConjectureRow {
  int rank = 0;
  int prime = 2;
  int s = 0;
  int t = 0;
  long long e2 = 0;
  bool vanishes = false;
};
/// E^2_{s,t} for t > 0 and s < r-1 across the given (rank, prime, tmax) cases.
struct ScanCase {
  int rank;
  int prime;
  int tmax;
};
/// The same rows for one computed set of pages.
std::vector<ConjectureRow> conjecture_rows(const SpectralPages& pages);
std::vector<ConjectureRow> conjecture_scan(const std::vector<ScanCase>& cases, std::size_t budget);

nlohmann::json pages_json(const SpectralPages& pages);
std::string pages_csv(const SpectralPages& pages);
std::string conjecture_csv(const std::vector<ConjectureRow>& rows);

}  // namespace pcat
