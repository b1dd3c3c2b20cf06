#include "pcat/category.hpp"

#include <algorithm>
#include <numeric>

#include "pcat/error.hpp"

namespace pcat {

ObjId FiniteCategory::Builder::add_object(std::string label) {
  cat_.objects_.push_back({std::move(label)});
  cat_.identity_.push_back(kNoMorphism);
  return static_cast<ObjId>(cat_.objects_.size() - 1);
}

MorId FiniteCategory::Builder::add_morphism(ObjId dom, ObjId cod, std::string label) {
  cat_.morphisms_.push_back({dom, cod, std::move(label)});
  return static_cast<MorId>(cat_.morphisms_.size() - 1);
}

void FiniteCategory::Builder::set_identity(ObjId a, MorId f) { cat_.identity_[a] = f; }

FiniteCategory FiniteCategory::Builder::build(const std::function<MorId(MorId, MorId)>& compose) && {
  FiniteCategory c = std::move(cat_);
  c.finalize_structure();
  c.comp_.assign(c.comp_offset_.empty() ? 0 : c.comp_offset_.back(), kNoMorphism);
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    std::size_t slot = c.comp_offset_[f];
    for (MorId g : c.out(c.cod(f))) c.comp_[slot++] = compose(f, g);
  }
  return c;
}

void FiniteCategory::finalize_structure() {
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();
  auto group = [&](bool by_dom, std::vector<MorId>& sorted, std::vector<std::size_t>& offset,
                   std::vector<std::uint32_t>& position) {
    sorted.resize(m);
    std::iota(sorted.begin(), sorted.end(), 0);
    std::sort(sorted.begin(), sorted.end(), [&](MorId f, MorId g) {
      const auto& a = morphisms_[f];
      const auto& b = morphisms_[g];
      const auto ka = by_dom ? std::tie(a.dom, a.cod) : std::tie(a.cod, a.dom);
      const auto kb = by_dom ? std::tie(b.dom, b.cod) : std::tie(b.cod, b.dom);
      if (ka != kb) return ka < kb;
      return f < g;
    });
    offset.assign(n + 1, 0);
    for (const auto& f : morphisms_) ++offset[(by_dom ? f.dom : f.cod) + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    position.assign(m, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = offset[a]; i < offset[a + 1]; ++i) position[sorted[i]] = static_cast<std::uint32_t>(i - offset[a]);
  };
  group(true, out_sorted_, out_offset_, out_position_);
  group(false, in_sorted_, in_offset_, in_position_);
  comp_offset_.assign(m + 1, 0);
  for (std::size_t f = 0; f < m; ++f) {
    const ObjId b = morphisms_[f].cod;
    comp_offset_[f + 1] = comp_offset_[f] + (out_offset_[b + 1] - out_offset_[b]);
  }
}

std::span<const MorId> FiniteCategory::out(ObjId a) const {
  return {out_sorted_.data() + out_offset_[a], out_offset_[a + 1] - out_offset_[a]};
}

std::span<const MorId> FiniteCategory::in(ObjId b) const {
  return {in_sorted_.data() + in_offset_[b], in_offset_[b + 1] - in_offset_[b]};
}

std::span<const MorId> FiniteCategory::hom(ObjId a, ObjId b) const {
  const auto all = out(a);
  auto lo = std::partition_point(all.begin(), all.end(), [&](MorId f) { return cod(f) < b; });
  auto hi = std::partition_point(lo, all.end(), [&](MorId f) { return cod(f) <= b; });
  return {lo, hi};
}

ValidationReport validate(const FiniteCategory& c, std::size_t triple_budget) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    if (r.violations.size() < 50) r.violations.push_back(std::move(msg));
  };
  const auto nobj = static_cast<ObjId>(c.num_objects());
  const auto nmor = static_cast<MorId>(c.num_morphisms());
  for (MorId f = 0; f < nmor; ++f) {
    if (c.dom(f) < 0 || c.dom(f) >= nobj || c.cod(f) < 0 || c.cod(f) >= nobj) {
      fail("morphism " + std::to_string(f) + " has out-of-range dom/cod");
      return r;
    }
  }
  for (ObjId a = 0; a < nobj; ++a) {
    const MorId id = c.identity(a);
    if (id < 0 || id >= nmor || c.dom(id) != a || c.cod(id) != a) {
      fail("object " + std::to_string(a) + " has no valid identity");
      return r;
    }
  }
  for (MorId f = 0; f < nmor; ++f) {
    if (c.comp(c.identity(c.dom(f)), f) != f) fail("left identity law fails for morphism " + std::to_string(f));
    if (c.comp(f, c.identity(c.cod(f))) != f) fail("right identity law fails for morphism " + std::to_string(f));
    for (MorId g : c.out(c.cod(f))) {
      const MorId fg = c.comp(f, g);
      if (fg < 0 || fg >= nmor || c.dom(fg) != c.dom(f) || c.cod(fg) != c.cod(g)) {
        fail("composite of (" + std::to_string(f) + ", " + std::to_string(g) + ") missing or has wrong dom/cod");
      }
    }
  }
  if (!r.valid) return r;
  std::size_t triples = 0;
  for (MorId f = 0; f < nmor; ++f)
    for (MorId g : c.out(c.cod(f))) {
      const MorId fg = c.comp(f, g);
      for (MorId h : c.out(c.cod(g))) {
        if (++triples > triple_budget) {
          r.violations.push_back("associativity check truncated at triple budget");
          return r;
        }
        if (c.comp(fg, h) != c.comp(f, c.comp(g, h))) {
          fail("associativity fails for triple (" + std::to_string(f) + ", " + std::to_string(g) + ", " +
               std::to_string(h) + ")");
        }
      }
    }
  return r;
}

ValidationReport validate_functor(const FunctorMap& fm) {
  ValidationReport r;
  auto fail = [&](std::string msg) {
    r.valid = false;
    if (r.violations.size() < 50) r.violations.push_back(std::move(msg));
  };
  const auto& s = *fm.source;
  const auto& t = *fm.target;
  for (ObjId a = 0; a < static_cast<ObjId>(s.num_objects()); ++a)
    if (fm.mor_map[s.identity(a)] != t.identity(fm.obj_map[a])) fail("identity of object " + std::to_string(a) + " not preserved");
  for (MorId f = 0; f < static_cast<MorId>(s.num_morphisms()); ++f) {
    const MorId ff = fm.mor_map[f];
    if (t.dom(ff) != fm.obj_map[s.dom(f)] || t.cod(ff) != fm.obj_map[s.cod(f)]) {
      fail("dom/cod of morphism " + std::to_string(f) + " not preserved");
      continue;
    }
    for (MorId g : s.out(s.cod(f)))
      if (fm.mor_map[s.comp(f, g)] != t.comp(ff, fm.mor_map[g])) {
        fail("composition (" + std::to_string(f) + ", " + std::to_string(g) + ") not preserved");
      }
  }
  return r;
}

bool is_iso(const FiniteCategory& c, MorId f) {
  const ObjId a = c.dom(f);
  const ObjId b = c.cod(f);
  for (MorId g : c.hom(b, a))
    if (c.comp(f, g) == c.identity(a) && c.comp(g, f) == c.identity(b)) return true;
  return false;
}

bool is_EI(const FiniteCategory& c) {
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) {
    const auto endos = c.hom(a, a);
    for (MorId f : endos) {
      bool invertible = false;
      for (MorId g : endos)
        if (c.comp(f, g) == c.identity(a)) {
          invertible = true;  // a left inverse in a finite monoid is two-sided
          break;
        }
      if (!invertible) return false;
    }
  }
  return true;
}

IsoClassIndex iso_classes(const FiniteCategory& c) {
  const std::size_t n = c.num_objects();
  std::vector<ObjId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ObjId a = 0; a < static_cast<ObjId>(n); ++a) {
    const auto out = c.out(a);
    for (std::size_t i = 0; i < out.size();) {
      const ObjId b = c.cod(out[i]);
      std::size_t j = i;
      while (j < out.size() && c.cod(out[j]) == b) ++j;
      if (b > a && find(a) != find(b)) {
        for (std::size_t k = i; k < j; ++k)
          if (is_iso(c, out[k])) {
            parent[find(b)] = find(a);
            break;
          }
      }
      i = j;
    }
  }
  IsoClassIndex idx;
  idx.class_of.assign(n, -1);
  idx.endo_count.resize(n);
  std::vector<int> root_class(n, -1);
  for (ObjId a = 0; a < static_cast<ObjId>(n); ++a) {
    const ObjId r = find(a);
    if (root_class[r] < 0) {
      root_class[r] = static_cast<int>(idx.classes.size());
      idx.classes.emplace_back();
    }
    idx.class_of[a] = root_class[r];
    idx.classes[root_class[r]].push_back(a);
    idx.endo_count[a] = c.hom_count(a, a);
  }
  return idx;
}

std::vector<int> heights(const FiniteCategory& c) {
  const auto idx = iso_classes(c);
  const std::size_t k = idx.num_classes();
  std::vector<std::vector<int>> succ(k);
  std::vector<int> indegree(k, 0);
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    const int ca = idx.class_of[c.dom(f)];
    const int cb = idx.class_of[c.cod(f)];
    if (ca == cb) {
      if (!is_iso(c, f)) throw Error(ErrorCode::CycleDetected, "nonisomorphism between isomorphic objects");
      continue;
    }
    succ[ca].push_back(cb);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int b : s) ++indegree[b];
  }
  std::vector<int> class_height(k, 0);
  std::vector<int> queue;
  for (std::size_t i = 0; i < k; ++i)
    if (indegree[i] == 0) queue.push_back(static_cast<int>(i));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int a = queue[head];
    for (int b : succ[a]) {
      class_height[b] = std::max(class_height[b], class_height[a] + 1);
      if (--indegree[b] == 0) queue.push_back(b);
    }
  }
  if (queue.size() != k) throw Error(ErrorCode::CycleDetected, "nonisomorphisms form a cycle");
  std::vector<int> out(c.num_objects());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = class_height[idx.class_of[a]];
  return out;
}

Subcategory full_subcategory(const FiniteCategory& c, const std::function<bool(ObjId)>& keep) {
  Subcategory s;
  std::vector<ObjId> obj_index(c.num_objects(), -1);
  FiniteCategory::Builder b;
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) {
    if (!keep(a)) continue;
    obj_index[a] = b.add_object(c.object(a).label);
    s.obj_map.push_back(a);
  }
  std::vector<MorId> mor_index(c.num_morphisms(), kNoMorphism);
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    if (obj_index[c.dom(f)] < 0 || obj_index[c.cod(f)] < 0) continue;
    mor_index[f] = b.add_morphism(obj_index[c.dom(f)], obj_index[c.cod(f)], c.morphism(f).label);
    s.mor_map.push_back(f);
  }
  for (ObjId a : s.obj_map) b.set_identity(obj_index[a], mor_index[c.identity(a)]);
  s.category = std::move(b).build([&](MorId f, MorId g) { return mor_index[c.comp(s.mor_map[f], s.mor_map[g])]; });
  return s;
}

FunctorMap inclusion_functor(std::shared_ptr<const FiniteCategory> sub, std::shared_ptr<const FiniteCategory> ambient,
                             const Subcategory& s) {
  return FunctorMap{std::move(sub), std::move(ambient), s.obj_map, s.mor_map};
}

SliceCategory coslice(const FiniteCategory& c, const std::vector<bool>& in_a, ObjId x, bool strict) {
  SliceCategory out;
  FiniteCategory::Builder b;
  std::vector<ObjId> obj_of(c.num_morphisms(), -1);
  for (MorId phi : c.out(x)) {
    if (!in_a[c.cod(phi)]) continue;
    if (strict && is_iso(c, phi)) continue;
    obj_of[phi] = b.add_object("m" + std::to_string(phi));
    out.underlying.push_back(phi);
  }
  // (object phi, position of u in out(cod phi)) -> morphism id
  std::vector<std::size_t> base(out.underlying.size() + 1, 0);
  for (std::size_t i = 0; i < out.underlying.size(); ++i) base[i + 1] = base[i] + c.out(c.cod(out.underlying[i])).size();
  std::vector<MorId> mor_of(base.back(), kNoMorphism);
  std::vector<std::pair<ObjId, MorId>> mor_data;  // (source object, underlying u)
  for (std::size_t i = 0; i < out.underlying.size(); ++i) {
    const MorId phi = out.underlying[i];
    for (MorId u : c.out(c.cod(phi))) {
      const ObjId target = obj_of[c.comp(phi, u)];
      if (target < 0) continue;
      const MorId id = b.add_morphism(static_cast<ObjId>(i), target, "u" + std::to_string(u));
      mor_of[base[i] + c.out_position(u)] = id;
      mor_data.emplace_back(static_cast<ObjId>(i), u);
      if (c.is_identity(u)) b.set_identity(static_cast<ObjId>(i), id);
    }
  }
  out.category = std::move(b).build([&](MorId f, MorId g) {
    const auto [src, u] = mor_data[f];
    const MorId v = mor_data[g].second;
    return mor_of[base[src] + c.out_position(c.comp(u, v))];
  });
  return out;
}

SliceCategory slice(const FiniteCategory& c, const std::vector<bool>& in_a, ObjId y, bool strict) {
  SliceCategory out;
  FiniteCategory::Builder b;
  std::vector<ObjId> obj_of(c.num_morphisms(), -1);
  for (MorId phi : c.in(y)) {
    if (!in_a[c.dom(phi)]) continue;
    if (strict && is_iso(c, phi)) continue;
    obj_of[phi] = b.add_object("m" + std::to_string(phi));
    out.underlying.push_back(phi);
  }
  // (target object phi2, position of u in in(dom phi2)) -> morphism id
  std::vector<std::size_t> base(out.underlying.size() + 1, 0);
  for (std::size_t i = 0; i < out.underlying.size(); ++i) base[i + 1] = base[i] + c.in(c.dom(out.underlying[i])).size();
  std::vector<MorId> mor_of(base.back(), kNoMorphism);
  std::vector<std::pair<MorId, ObjId>> mor_data;  // (underlying u, target object)
  for (std::size_t j = 0; j < out.underlying.size(); ++j) {
    const MorId phi2 = out.underlying[j];
    for (MorId u : c.in(c.dom(phi2))) {
      if (!in_a[c.dom(u)]) continue;
      const ObjId source = obj_of[c.comp(u, phi2)];
      if (source < 0) continue;
      const MorId id = b.add_morphism(source, static_cast<ObjId>(j), "u" + std::to_string(u));
      mor_of[base[j] + c.in_position(u)] = id;
      mor_data.emplace_back(u, static_cast<ObjId>(j));
      if (c.is_identity(u)) b.set_identity(static_cast<ObjId>(j), id);
    }
  }
  out.category = std::move(b).build([&](MorId f, MorId g) {
    const MorId u = mor_data[f].first;
    const auto [v, dst] = mor_data[g];
    return mor_of[base[dst] + c.in_position(c.comp(u, v))];
  });
  return out;
}

SliceCategory coslice(const FiniteCategory& c, ObjId x, bool strict) {
  return coslice(c, std::vector<bool>(c.num_objects(), true), x, strict);
}

SliceCategory slice(const FiniteCategory& c, ObjId y, bool strict) {
  return slice(c, std::vector<bool>(c.num_objects(), true), y, strict);
}

FiniteCategory opposite(const FiniteCategory& c) {
  FiniteCategory::Builder b;
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) b.add_object(c.object(a).label);
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) b.add_morphism(c.cod(f), c.dom(f), c.morphism(f).label);
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) b.set_identity(a, c.identity(a));
  return std::move(b).build([&](MorId f, MorId g) { return c.comp(g, f); });
}

Subcategory skeleton(const FiniteCategory& c) {
  const auto idx = iso_classes(c);
  std::vector<bool> keep(c.num_objects(), false);
  for (const auto& cls : idx.classes) keep[cls.front()] = true;
  return full_subcategory(c, [&](ObjId a) { return keep[a]; });
}

std::vector<ObjId> initial_objects(const FiniteCategory& c) {
  std::vector<ObjId> out;
  for (ObjId x = 0; x < static_cast<ObjId>(c.num_objects()); ++x) {
    if (c.out(x).size() != c.num_objects()) continue;
    bool ok = true;
    for (ObjId y = 0; y < static_cast<ObjId>(c.num_objects()) && ok; ++y) ok = c.hom_count(x, y) == 1;
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<ObjId> terminal_objects(const FiniteCategory& c) {
  std::vector<ObjId> out;
  for (ObjId y = 0; y < static_cast<ObjId>(c.num_objects()); ++y) {
    if (c.in(y).size() != c.num_objects()) continue;
    bool ok = true;
    for (ObjId x = 0; x < static_cast<ObjId>(c.num_objects()) && ok; ++x) ok = c.hom_count(x, y) == 1;
    if (ok) out.push_back(y);
  }
  return out;
}

bool is_thin(const FiniteCategory& c) {
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) {
    const auto out = c.out(a);
    for (std::size_t i = 1; i < out.size(); ++i)
      if (c.cod(out[i]) == c.cod(out[i - 1])) return false;
  }
  return true;
}

bool all_monomorphisms(const FiniteCategory& c) {
  std::vector<MorId> seen;
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    const ObjId a = c.dom(f);
    seen.clear();
    // g, h: z -> a with g f = h f must coincide; composites from distinct z differ by domain.
    for (MorId g : c.in(a)) seen.push_back(c.comp(g, f));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool all_epimorphisms(const FiniteCategory& c) {
  std::vector<MorId> seen;
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    seen.clear();
    for (MorId g : c.out(c.cod(f))) seen.push_back(c.comp(f, g));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

FunctorMap compose(const FunctorMap& f, const FunctorMap& g) {
  FunctorMap out{f.source, g.target, {}, {}};
  out.obj_map.reserve(f.obj_map.size());
  for (ObjId a : f.obj_map) out.obj_map.push_back(g.obj_map[a]);
  out.mor_map.reserve(f.mor_map.size());
  for (MorId m : f.mor_map) out.mor_map.push_back(g.mor_map[m]);
  return out;
}

bool is_faithful(const FunctorMap& fm) {
  const auto& s = *fm.source;
  std::vector<MorId> images;
  for (ObjId a = 0; a < static_cast<ObjId>(s.num_objects()); ++a)
    for (ObjId b = 0; b < static_cast<ObjId>(s.num_objects()); ++b) {
      images.clear();
      for (MorId f : s.hom(a, b)) images.push_back(fm.mor_map[f]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    }
  return true;
}

bool is_full(const FunctorMap& fm) {
  const auto& s = *fm.source;
  const auto& t = *fm.target;
  std::vector<MorId> images;
  for (ObjId a = 0; a < static_cast<ObjId>(s.num_objects()); ++a)
    for (ObjId b = 0; b < static_cast<ObjId>(s.num_objects()); ++b) {
      images.clear();
      for (MorId f : s.hom(a, b)) images.push_back(fm.mor_map[f]);
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      if (images.size() != t.hom_count(fm.obj_map[a], fm.obj_map[b])) return false;
    }
  return true;
}

}  // namespace pcat
