#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pcat/category.hpp"

namespace pcat {

inline constexpr std::size_t kDefaultChainBudget = 5'000'000;

/// kDefaultChainBudget unless PCAT_BUDGET_CHAINS holds a positive integer.
std::size_t default_chain_budget();

struct NerveOptions {
  int dmax = 3;
  int prime = 0;  // 0 means rational coefficients
  std::size_t budget = default_chain_budget();
  bool use_skeleton = true;
  bool use_shortcut = true;
};

/// "Q" or "F<p>".
std::string field_name(int prime);

/// Number of nondegenerate n-simplices of the nerve for n = 0..max_degree.
std::vector<std::uint64_t> chain_counts(const FiniteCategory& c, int max_degree);

struct BettiResult {
  int prime = 0;
  int dmax = 0;
  std::vector<long long> betti;         // degrees 0..dmax
  std::vector<std::uint64_t> chains;    // simplices in degrees 0..dmax+1 of the complex used
  bool shortcut = false;                // decided by an initial or terminal object
  bool skeleton = false;                // computed on a skeleton
  /// b_0 - 1 in degree 0 for nonempty input.
  std::vector<long long> reduced() const;
};

/// Betti numbers of the nerve in degrees 0..dmax. Throws BudgetExceeded when
/// more than opt.budget simplices would be needed.
BettiResult betti(const FiniteCategory& c, const NerveOptions& opt);

/// Same numbers from dense Eigen boundary matrices built face by face, with no
/// skeleton, shortcut or coboundary tricks. For small inputs only.
std::vector<long long> betti_dense(const FiniteCategory& c, int prime, int dmax);

struct InducedMapResult {
  int prime = 0;
  int dmax = 0;
  std::vector<long long> source_betti;
  std::vector<long long> target_betti;
  std::vector<long long> rank;  // rank of the induced map in degrees 0..dmax
  bool iso = false;             // isomorphism in every degree <= dmax
  bool skeleton = false;
  std::uint64_t chains = 0;     // simplices handled
};

/// Ranks of F_*: H_n(NA) -> H_n(NC) from the long exact sequence of the
/// mapping cone.
InducedMapResult induced_map(const FunctorMap& f, const NerveOptions& opt);

/// Number of simplices of degree <= max_degree whose boundary of boundary is
/// nonzero over the integers.
std::size_t boundary_squared_violations(const FiniteCategory& c, int max_degree);

/// Alternating sum of simplex counts. Needs a nerve of finite dimension (no
/// nonidentity endomorphisms), else PreconditionViolated.
long long nerve_euler_characteristic(const FiniteCategory& c);

nlohmann::json betti_json(const BettiResult& b);
nlohmann::json induced_map_json(const InducedMapResult& r);

}  // namespace pcat
