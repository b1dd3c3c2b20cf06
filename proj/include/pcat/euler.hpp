#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "pcat/category.hpp"
#include "pcat/field.hpp"
#include "pcat/perm_group.hpp"

namespace pcat {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// zeta([a],[b]) = |C(a,b)| on representatives, classes in IsoClassIndex order.
/// Throws PreconditionViolated if a different choice of representatives would
/// give a different count (impossible for a valid category).
IntMatrix class_matrix(const FiniteCategory& c, const IsoClassIndex& classes);
IntMatrix class_matrix(const FiniteCategory& c);

enum class WeightKind { Weighting, Coweighting };
enum class WeightMethod { TriangularEI, GeneralSolve, Slices };

std::string_view to_string(WeightKind k);
std::string_view to_string(WeightMethod m);

/// Class-level (co)weighting: values[k] is the sum over the objects of class k
/// of the object-level values.
struct Weighting {
  WeightKind kind = WeightKind::Weighting;
  WeightMethod method = WeightMethod::TriangularEI;
  IsoClassIndex classes;
  std::vector<Rational> values;

  Rational total() const;
  /// Object-level value k^a = values[[a]] / |[a]|.
  Rational object_value(ObjId a) const;
  /// Class indices with nonzero value.
  std::vector<std::size_t> support() const;
};

/// Triangular back-substitution in height order for EI input, exact Gaussian
/// elimination otherwise. Throws NoWeighting / NonUniqueWeighting.
Weighting weighting(const FiniteCategory& c);
Weighting coweighting(const FiniteCategory& c);
/// Forces the general elimination path, for cross-checks.
Weighting weighting_by_elimination(const FiniteCategory& c);
Weighting coweighting_by_elimination(const FiniteCategory& c);

/// True when sum_b zeta(a,b) k^b = 1 for all a (or the transposed system).
bool satisfies_defining_system(const FiniteCategory& c, const Weighting& w);

struct EulerReport {
  Rational chi;
  Rational chi_reduced;
  Rational via_weighting;
  Rational via_coweighting;
  bool consistent = false;
};

EulerReport euler_characteristic(const FiniteCategory& c);
/// chi of the empty category is 0.
Rational euler_chi(const FiniteCategory& c);

/// Memo for the recursive slice computation, keyed by a fingerprint of the
/// skeleton's class matrix. Safe for concurrent use.
class SliceMemo {
 public:
  bool lookup(const std::string& key, Rational& out) const;
  void store(const std::string& key, const Rational& value);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, Rational> table_;
};

/// k^[a] = -reduced_chi(a//C) / |C(a)| with chi(a//C) computed by the same
/// recursion, never by a linear solve. EI input only (PreconditionViolated).
/// `threads` > 1 spreads the top-level classes over worker threads.
Weighting weighting_via_slices(const FiniteCategory& c, unsigned threads = 1, SliceMemo* memo = nullptr);
/// k_[b] = -reduced_chi(C//b) / |C(b)| via strict slices.
Weighting coweighting_via_slices(const FiniteCategory& c, unsigned threads = 1, SliceMemo* memo = nullptr);

/// Closed forms for a nonidentity p-group P against the built categories.
struct Lemma41Values {
  int prime = 0;
  std::size_t order = 0;
  bool cyclic = false;
  long long mu = 0;
  std::size_t center_index = 0;  // |P : Z(P)|
  Rational chi_tilde_S;          // reduced chi of S_P(1,P)
  Rational chi_tilde_Ftilde;     // reduced chi of the exterior quotient on (1,P)
  Rational chi_O;                // chi of O_P[1,P)
  Rational predicted_Ftilde;     // mu / |P : Z(P)|
  Rational predicted_O;          // 1/p (cyclic) or 1
  bool holds = false;
};
/// P given as a permutation group that is itself a p-group.
Lemma41Values lemma41_values(const PermGroup& p_group);

nlohmann::json weighting_json(const Weighting& w);
nlohmann::json euler_report_json(const FiniteCategory& c, const Weighting& w, const Weighting& cw,
                                 const EulerReport& e);

}  // namespace pcat
