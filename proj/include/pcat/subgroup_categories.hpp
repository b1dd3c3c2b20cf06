#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/category.hpp"
#include "pcat/p_subgroups.hpp"
#include "pcat/perm_group.hpp"

namespace pcat {

/// The six p-subgroup categories: poset, transporter, linking, fusion, orbit,
/// and the exterior quotient of the fusion category.
enum class Flavor { S, T, L, F, O, FTilde };

inline constexpr Flavor kAllFlavors[] = {Flavor::S, Flavor::T, Flavor::L, Flavor::F, Flavor::O, Flavor::FTilde};

/// CLI name: s, t, l, f, o, ftilde.
std::string_view to_string(Flavor f);
Flavor parse_flavor(std::string_view name);

/// Which p-subgroups become objects.
struct ObjectFilter {
  enum class Kind { All, Star, StarEab, Sfc, SfcRad, Rad, StarRad, Interval };
  Kind kind = Kind::All;

  // Interval bounds, as tokens: "1" (trivial), "P" (the chosen Sylow) or a
  // lattice index.
  std::string lower = "1";
  std::string upper = "P";
  bool lower_closed = true;
  bool upper_closed = false;

  static ObjectFilter all() { return {}; }
  static ObjectFilter of(Kind k) {
    ObjectFilter f;
    f.kind = k;
    return f;
  }
  static ObjectFilter interval(bool lower_closed, std::string lower, std::string upper, bool upper_closed);
};

inline constexpr ObjectFilter::Kind kStandardFilters[] = {
    ObjectFilter::Kind::All,    ObjectFilter::Kind::Star, ObjectFilter::Kind::StarEab, ObjectFilter::Kind::Sfc,
    ObjectFilter::Kind::SfcRad, ObjectFilter::Kind::Rad,  ObjectFilter::Kind::StarRad};

/// all | star | star-eab | sfc | sfc-rad | rad | star-rad | interval:[A..B)
/// (brackets optional, default [A..B)).
ObjectFilter parse_filter(std::string_view text);
std::string to_string(const ObjectFilter& f);

/// A group, a prime, and everything about its p-subgroups that the builders
/// consult repeatedly.
struct PGroupContext {
  PermGroup group;
  int prime = 0;
  PSubgroupLattice lattice;
  std::vector<Subgroup> centralizers;     // C_G(H) per lattice index
  std::vector<Subgroup> normalizers;      // N_G(H)
  std::vector<Subgroup> op_centralizers;  // O^p C_G(H)

  const Subgroup& subgroup(std::size_t i) const { return lattice.subgroup(i); }
  const Subgroup& sylow() const { return lattice.subgroup(lattice.sylow_index()); }
};

std::shared_ptr<const PGroupContext> make_context(PermGroup g, int p, std::size_t subgroup_cap = kDefaultSubgroupCap);

/// Whether H counts as radical for this flavor: F-radical for the fusion-side
/// flavors F, FTilde and L, G-radical otherwise.
bool is_radical_for(Flavor f, const SubgroupAttributes& a);

/// Lattice indices selected by the filter, in increasing order.
std::vector<std::size_t> filter_objects(const PGroupContext& ctx, Flavor flavor, const ObjectFilter& filter);

/// Least element of the class of g in the morphism set of the flavor from H to
/// K (H, K lattice indices, g in N_G(H,K)).
ElemId canonical_rep(const PGroupContext& ctx, Flavor flavor, std::size_t h, std::size_t k, ElemId g);

/// A built p-subgroup category. Morphism ids within each hom-set are ordered by
/// canonical representative.
struct SubgroupCategory {
  std::shared_ptr<const PGroupContext> ctx;
  Flavor flavor = Flavor::S;
  ObjectFilter filter;
  std::vector<std::size_t> subgroup_of;  // object -> lattice index
  std::vector<ObjId> object_index;       // lattice index -> object, or -1
  std::vector<ElemId> rep;               // morphism -> canonical element
  std::shared_ptr<const FiniteCategory> category;

  const FiniteCategory& cat() const { return *category; }
  ObjId object_of(std::size_t lattice_index) const { return object_index[lattice_index]; }
  /// Morphism a -> b represented by any element of its class.
  MorId find_morphism(ObjId a, ObjId b, ElemId g) const;
};

SubgroupCategory build(std::shared_ptr<const PGroupContext> ctx, Flavor flavor, const ObjectFilter& filter);

/// Functor between two categories built on the same context: either an
/// inclusion (same flavor, objects of `source` among those of `target`) or one
/// of the quotient functors S -> T -> L -> F -> FTilde, T -> O -> FTilde and
/// their composites, combined with an inclusion. Throws PreconditionViolated
/// for any other pair.
FunctorMap induced_functor(const SubgroupCategory& source, const SubgroupCategory& target);
bool flavor_maps_to(Flavor from, Flavor to);

struct AutSizeCheck {
  ObjId object = 0;
  std::size_t actual = 0;
  std::size_t expected = 0;
};
/// |C(H)| against the automorphism-group formula of the flavor. Throws
/// MismatchedAutGroup on the first disagreement.
std::vector<AutSizeCheck> aut_sizes(const SubgroupCategory& c);

/// Both sides of the extension criterion for fusion morphisms.
struct ExtensionCheck {
  bool extends = false;    // some psi in F(N, K) restricts to phi
  bool condition = false;  // F_N(H)^phi <= F_K(H^phi)
};
/// h, n, k are lattice indices with H <= N <= N_P(H) and H, K <= P for the
/// context Sylow P; phi is represented by g in N_G(H, K). Throws
/// PreconditionViolated when H is not selfcentralizing or the inclusions fail,
/// EquivalenceViolation when the two sides disagree.
ExtensionCheck fusion_extends(const PGroupContext& ctx, std::size_t h, std::size_t n, std::size_t k, ElemId g);

}  // namespace pcat
