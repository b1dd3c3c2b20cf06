#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pcat {

using ObjId = std::int32_t;
using MorId = std::int32_t;
inline constexpr MorId kNoMorphism = -1;

struct CategoryObject {
  std::string label;
};

struct CategoryMorphism {
  ObjId dom = 0;
  ObjId cod = 0;
  std::string label;
};

/// A finite category with dense object and morphism ids. Composition is in
/// diagrammatic order: comp(f, g) is "f then g" and needs cod(f) == dom(g).
/// The composition table stores one entry per composable pair.
class FiniteCategory {
 public:
  class Builder;

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  bool empty() const { return objects_.empty(); }

  const CategoryObject& object(ObjId a) const { return objects_[a]; }
  const CategoryMorphism& morphism(MorId f) const { return morphisms_[f]; }
  ObjId dom(MorId f) const { return morphisms_[f].dom; }
  ObjId cod(MorId f) const { return morphisms_[f].cod; }
  MorId identity(ObjId a) const { return identity_[a]; }
  bool is_identity(MorId f) const { return identity_[dom(f)] == f; }

  /// Morphisms with domain a, sorted by (cod, id).
  std::span<const MorId> out(ObjId a) const;
  /// Morphisms with codomain b, sorted by (dom, id).
  std::span<const MorId> in(ObjId b) const;
  std::span<const MorId> hom(ObjId a, ObjId b) const;
  std::size_t hom_count(ObjId a, ObjId b) const { return hom(a, b).size(); }

  /// Position of f within out(dom f) / in(cod f).
  std::size_t out_position(MorId f) const { return out_position_[f]; }
  std::size_t in_position(MorId f) const { return in_position_[f]; }

  /// f then g; kNoMorphism when not composable or when the table has no entry.
  MorId comp(MorId f, MorId g) const {
    if (cod(f) != dom(g)) return kNoMorphism;
    return comp_[comp_offset_[f] + out_position_[g]];
  }

 private:
  void finalize_structure();

  std::vector<CategoryObject> objects_;
  std::vector<CategoryMorphism> morphisms_;
  std::vector<MorId> identity_;
  std::vector<MorId> out_sorted_;
  std::vector<std::size_t> out_offset_;
  std::vector<MorId> in_sorted_;
  std::vector<std::size_t> in_offset_;
  std::vector<std::uint32_t> out_position_;
  std::vector<std::uint32_t> in_position_;
  std::vector<std::size_t> comp_offset_;
  std::vector<MorId> comp_;
};

class FiniteCategory::Builder {
 public:
  ObjId add_object(std::string label);
  MorId add_morphism(ObjId dom, ObjId cod, std::string label = {});
  void set_identity(ObjId a, MorId f);

  /// Calls compose(f, g) once per composable pair to fill the table.
  FiniteCategory build(const std::function<MorId(MorId, MorId)>& compose) &&;

 private:
  FiniteCategory cat_;
};

/// Functor between two finite categories, stored as object and morphism maps.
struct FunctorMap {
  std::shared_ptr<const FiniteCategory> source;
  std::shared_ptr<const FiniteCategory> target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Identity laws, dom/cod coherence of comp, and associativity of every
/// composable triple (up to `triple_budget` triples; beyond that the report
/// notes the truncation).
ValidationReport validate(const FiniteCategory& c, std::size_t triple_budget = 50'000'000);
ValidationReport validate_functor(const FunctorMap& f);

/// Two-sided inverse exists.
bool is_iso(const FiniteCategory& c, MorId f);
bool is_EI(const FiniteCategory& c);

struct IsoClassIndex {
  std::vector<std::vector<ObjId>> classes;  // ordered by least member
  std::vector<int> class_of;
  std::vector<std::size_t> endo_count;      // |C(a)| per object
  std::size_t num_classes() const { return classes.size(); }
  std::size_t class_size(std::size_t k) const { return classes[k].size(); }
  ObjId representative(std::size_t k) const { return classes[k].front(); }
};
IsoClassIndex iso_classes(const FiniteCategory& c);

/// Longest path of nonisomorphisms ending at each object. Throws CycleDetected
/// when nonisomorphisms form a cycle (non-EI input).
std::vector<int> heights(const FiniteCategory& c);

struct Subcategory {
  FiniteCategory category;
  std::vector<ObjId> obj_map;  // sub object -> ambient object
  std::vector<MorId> mor_map;  // sub morphism -> ambient morphism
  bool empty() const { return category.empty(); }
};
Subcategory full_subcategory(const FiniteCategory& c, const std::function<bool(ObjId)>& keep);
FunctorMap inclusion_functor(std::shared_ptr<const FiniteCategory> sub, std::shared_ptr<const FiniteCategory> ambient,
                             const Subcategory& s);

/// Objects of a slice or coslice and the underlying morphism of each.
struct SliceCategory {
  FiniteCategory category;
  std::vector<MorId> underlying;
};

/// x/A (strict = false) or x//A (strict = true), for A the full subcategory
/// on the objects with in_a[a] set.
SliceCategory coslice(const FiniteCategory& c, const std::vector<bool>& in_a, ObjId x, bool strict);
/// A/y or A//y.
SliceCategory slice(const FiniteCategory& c, const std::vector<bool>& in_a, ObjId y, bool strict);
/// Coslice/slice with A = C.
SliceCategory coslice(const FiniteCategory& c, ObjId x, bool strict);
SliceCategory slice(const FiniteCategory& c, ObjId y, bool strict);

FiniteCategory opposite(const FiniteCategory& c);

/// Full subcategory on the least object of every isomorphism class.
Subcategory skeleton(const FiniteCategory& c);

/// Objects x with |C(x, y)| = 1 for all y.
std::vector<ObjId> initial_objects(const FiniteCategory& c);
std::vector<ObjId> terminal_objects(const FiniteCategory& c);

/// At most one morphism between any ordered pair of objects.
bool is_thin(const FiniteCategory& c);
/// g f = h f implies g = h, for every f (diagrammatic order).
bool all_monomorphisms(const FiniteCategory& c);
/// f g = f h implies g = h, for every f.
bool all_epimorphisms(const FiniteCategory& c);

/// Functor composite f then g.
FunctorMap compose(const FunctorMap& f, const FunctorMap& g);
/// Injective / surjective on every hom-set.
bool is_faithful(const FunctorMap& f);
bool is_full(const FunctorMap& f);

}  // namespace pcat
