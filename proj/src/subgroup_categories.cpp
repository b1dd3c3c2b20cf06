#include "pcat/subgroup_categories.hpp"

#include <algorithm>
#include <charconv>

#include "pcat/error.hpp"

namespace pcat {

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::S: return "s";
    case Flavor::T: return "t";
    case Flavor::L: return "l";
    case Flavor::F: return "f";
    case Flavor::O: return "o";
    case Flavor::FTilde: return "ftilde";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  for (Flavor f : kAllFlavors)
    if (to_string(f) == name) return f;
  throw Error(ErrorCode::ConfigError, "unknown flavor '" + std::string(name) + "'");
}

ObjectFilter ObjectFilter::interval(bool lower_closed, std::string lower, std::string upper, bool upper_closed) {
  ObjectFilter f;
  f.kind = Kind::Interval;
  f.lower = std::move(lower);
  f.upper = std::move(upper);
  f.lower_closed = lower_closed;
  f.upper_closed = upper_closed;
  return f;
}

namespace {

struct FilterName {
  ObjectFilter::Kind kind;
  std::string_view name;
};

constexpr FilterName kFilterNames[] = {
    {ObjectFilter::Kind::All, "all"},          {ObjectFilter::Kind::Star, "star"},
    {ObjectFilter::Kind::StarEab, "star-eab"}, {ObjectFilter::Kind::Sfc, "sfc"},
    {ObjectFilter::Kind::SfcRad, "sfc-rad"},   {ObjectFilter::Kind::Rad, "rad"},
    {ObjectFilter::Kind::StarRad, "star-rad"},
};

}  // namespace

ObjectFilter parse_filter(std::string_view text) {
  for (const auto& [kind, name] : kFilterNames)
    if (text == name) return ObjectFilter::of(kind);
  constexpr std::string_view prefix = "interval:";
  if (!text.starts_with(prefix)) throw Error(ErrorCode::ConfigError, "unknown filter '" + std::string(text) + "'");
  std::string_view body = text.substr(prefix.size());
  bool lower_closed = true, upper_closed = false;
  if (!body.empty() && (body.front() == '[' || body.front() == '(')) {
    lower_closed = body.front() == '[';
    body.remove_prefix(1);
  }
  if (!body.empty() && (body.back() == ']' || body.back() == ')')) {
    upper_closed = body.back() == ']';
    body.remove_suffix(1);
  }
  const auto dots = body.find("..");
  if (dots == std::string_view::npos || dots == 0 || dots + 2 >= body.size()) {
    throw Error(ErrorCode::ConfigError, "interval filter needs the form interval:[A..B)");
  }
  return ObjectFilter::interval(lower_closed, std::string(body.substr(0, dots)), std::string(body.substr(dots + 2)),
                                upper_closed);
}

std::string to_string(const ObjectFilter& f) {
  if (f.kind != ObjectFilter::Kind::Interval) {
    for (const auto& [kind, name] : kFilterNames)
      if (kind == f.kind) return std::string(name);
  }
  return "interval:" + std::string(f.lower_closed ? "[" : "(") + f.lower + ".." + f.upper + (f.upper_closed ? "]" : ")");
}

std::shared_ptr<const PGroupContext> make_context(PermGroup g, int p, std::size_t subgroup_cap) {
  auto ctx = std::make_shared<PGroupContext>();
  ctx->group = std::move(g);
  ctx->prime = p;
  ctx->lattice = enumerate_p_subgroups(ctx->group, p, subgroup_cap);
  const std::size_t n = ctx->lattice.size();
  ctx->centralizers.reserve(n);
  ctx->normalizers.reserve(n);
  ctx->op_centralizers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Subgroup& h = ctx->lattice.subgroup(i);
    ctx->centralizers.push_back(centralizer(ctx->group, h));
    ctx->normalizers.push_back(normalizer(ctx->group, h));
    ctx->op_centralizers.push_back(o_upper_p(ctx->group, ctx->centralizers.back(), p));
  }
  return ctx;
}

bool is_radical_for(Flavor f, const SubgroupAttributes& a) {
  switch (f) {
    case Flavor::F:
    case Flavor::FTilde:
    case Flavor::L: return a.is_F_radical;
    default: return a.is_G_radical;
  }
}

namespace {

std::size_t resolve_bound(const PGroupContext& ctx, const std::string& token) {
  if (token == "1") return 0;
  if (token == "P" || token == "G") return ctx.lattice.sylow_index();
  std::size_t idx = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, idx);
  if (ec != std::errc() || ptr != end || idx >= ctx.lattice.size()) {
    throw Error(ErrorCode::ConfigError, "bad interval bound '" + token + "'");
  }
  return idx;
}

}  // namespace

std::vector<std::size_t> filter_objects(const PGroupContext& ctx, Flavor flavor, const ObjectFilter& filter) {
  using Kind = ObjectFilter::Kind;
  const auto& lat = ctx.lattice;
  std::vector<std::size_t> out;
  std::size_t lo = 0, hi = 0;
  if (filter.kind == Kind::Interval) {
    lo = resolve_bound(ctx, filter.lower);
    hi = resolve_bound(ctx, filter.upper);
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& a = lat.attrs(i);
    const bool nontrivial = a.order > 1;
    bool keep = false;
    switch (filter.kind) {
      case Kind::All: keep = true; break;
      case Kind::Star: keep = nontrivial; break;
      case Kind::StarEab: keep = a.is_eab; break;
      case Kind::Sfc: keep = a.is_G_selfcentralizing; break;
      case Kind::SfcRad: keep = a.is_G_selfcentralizing && is_radical_for(flavor, a); break;
      case Kind::Rad: keep = is_radical_for(flavor, a); break;
      case Kind::StarRad: keep = nontrivial && is_radical_for(flavor, a); break;
      case Kind::Interval:
        keep = lat.leq(lo, i) && lat.leq(i, hi) && (filter.lower_closed || i != lo) && (filter.upper_closed || i != hi);
        break;
    }
    if (keep) out.push_back(i);
  }
  return out;
}

ElemId canonical_rep(const PGroupContext& ctx, Flavor flavor, std::size_t h, std::size_t k, ElemId g) {
  const PermGroup& G = ctx.group;
  ElemId best = g;
  switch (flavor) {
    case Flavor::S: return PermGroup::identity();
    case Flavor::T: return g;
    case Flavor::L:
      for (ElemId c : ctx.op_centralizers[h].members()) best = std::min(best, G.mul(c, g));
      return best;
    case Flavor::F:
      for (ElemId c : ctx.centralizers[h].members()) best = std::min(best, G.mul(c, g));
      return best;
    case Flavor::O:
      for (ElemId x : ctx.subgroup(k).members()) best = std::min(best, G.mul(g, x));
      return best;
    case Flavor::FTilde:
      for (ElemId c : ctx.centralizers[h].members()) {
        const ElemId cg = G.mul(c, g);
        for (ElemId x : ctx.subgroup(k).members()) best = std::min(best, G.mul(cg, x));
      }
      return best;
  }
  return best;
}

MorId SubgroupCategory::find_morphism(ObjId a, ObjId b, ElemId g) const {
  const ElemId r = canonical_rep(*ctx, flavor, subgroup_of[a], subgroup_of[b], g);
  const auto hom = category->hom(a, b);
  auto it = std::lower_bound(hom.begin(), hom.end(), r, [&](MorId f, ElemId x) { return rep[f] < x; });
  if (it == hom.end() || rep[*it] != r) return kNoMorphism;
  return *it;
}

SubgroupCategory build(std::shared_ptr<const PGroupContext> ctx, Flavor flavor, const ObjectFilter& filter) {
  SubgroupCategory sc;
  sc.ctx = ctx;
  sc.flavor = flavor;
  sc.filter = filter;
  sc.subgroup_of = filter_objects(*ctx, flavor, filter);
  sc.object_index.assign(ctx->lattice.size(), -1);

  const PermGroup& G = ctx->group;
  FiniteCategory::Builder b;
  for (std::size_t i : sc.subgroup_of) {
    sc.object_index[i] = b.add_object("H" + std::to_string(i));
  }
  const auto n = static_cast<ObjId>(sc.subgroup_of.size());
  // Morphisms of each hom-set are created contiguously in increasing rep order.
  std::vector<MorId> hom_begin(static_cast<std::size_t>(n) * n + 1, 0);
  for (ObjId a = 0; a < n; ++a) {
    const std::size_t h = sc.subgroup_of[a];
    for (ObjId c = 0; c < n; ++c) {
      const std::size_t k = sc.subgroup_of[c];
      hom_begin[static_cast<std::size_t>(a) * n + c] = static_cast<MorId>(sc.rep.size());
      std::vector<ElemId> reps;
      if (flavor == Flavor::S) {
        if (ctx->lattice.leq(h, k)) reps.push_back(PermGroup::identity());
      } else {
        for (ElemId g : transporter(G, ctx->subgroup(h), ctx->subgroup(k))) {
          reps.push_back(canonical_rep(*ctx, flavor, h, k, g));
        }
        std::sort(reps.begin(), reps.end());
        reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      }
      const ElemId id_rep = a == c ? canonical_rep(*ctx, flavor, h, k, PermGroup::identity()) : -1;
      for (ElemId r : reps) {
        const MorId f = b.add_morphism(a, c, flavor == Flavor::S ? "incl" : G.element(r).to_cycle_string());
        sc.rep.push_back(r);
        if (r == id_rep) b.set_identity(a, f);
      }
    }
  }
  hom_begin.back() = static_cast<MorId>(sc.rep.size());

  std::vector<ObjId> dom_of(sc.rep.size()), cod_of(sc.rep.size());
  for (std::size_t pair = 0; pair + 1 < hom_begin.size(); ++pair)
    for (MorId f = hom_begin[pair]; f < hom_begin[pair + 1]; ++f) {
      dom_of[f] = static_cast<ObjId>(pair / n);
      cod_of[f] = static_cast<ObjId>(pair % n);
    }
  auto compose = [&](MorId f, MorId g) -> MorId {
    const ObjId a = dom_of[f];
    const ObjId c = cod_of[g];
    const ElemId r = canonical_rep(*ctx, flavor, sc.subgroup_of[a], sc.subgroup_of[c], G.mul(sc.rep[f], sc.rep[g]));
    const std::size_t pair = static_cast<std::size_t>(a) * n + c;
    const auto first = sc.rep.begin() + hom_begin[pair];
    const auto last = sc.rep.begin() + hom_begin[pair + 1];
    const auto it = std::lower_bound(first, last, r);
    if (it == last || *it != r) return kNoMorphism;
    return static_cast<MorId>(it - sc.rep.begin());
  };
  sc.category = std::make_shared<const FiniteCategory>(std::move(b).build(compose));
  return sc;
}

bool flavor_maps_to(Flavor from, Flavor to) {
  if (from == to) return true;
  auto rank_in = [](Flavor f, std::initializer_list<Flavor> chain) {
    int i = 0;
    for (Flavor x : chain) {
      if (x == f) return i;
      ++i;
    }
    return -1;
  };
  for (auto chain : {std::initializer_list<Flavor>{Flavor::S, Flavor::T, Flavor::L, Flavor::F, Flavor::FTilde},
                     std::initializer_list<Flavor>{Flavor::S, Flavor::T, Flavor::O, Flavor::FTilde}}) {
    const int a = rank_in(from, chain);
    const int b = rank_in(to, chain);
    if (a >= 0 && b >= 0 && a < b) return true;
  }
  return false;
}

FunctorMap induced_functor(const SubgroupCategory& source, const SubgroupCategory& target) {
  if (source.ctx != target.ctx) throw Error(ErrorCode::PreconditionViolated, "functor between different groups");
  if (!flavor_maps_to(source.flavor, target.flavor)) {
    throw Error(ErrorCode::PreconditionViolated, "no functor from flavor " + std::string(to_string(source.flavor)) +
                                                     " to " + std::string(to_string(target.flavor)));
  }
  FunctorMap fm{source.category, target.category, {}, {}};
  for (std::size_t i : source.subgroup_of) {
    const ObjId t = target.object_of(i);
    if (t < 0) throw Error(ErrorCode::PreconditionViolated, "object H" + std::to_string(i) + " missing in target");
    fm.obj_map.push_back(t);
  }
  const FiniteCategory& s = source.cat();
  fm.mor_map.reserve(s.num_morphisms());
  for (MorId f = 0; f < static_cast<MorId>(s.num_morphisms()); ++f) {
    const MorId image = target.find_morphism(fm.obj_map[s.dom(f)], fm.obj_map[s.cod(f)], source.rep[f]);
    if (image == kNoMorphism) throw Error(ErrorCode::PreconditionViolated, "morphism has no image");
    fm.mor_map.push_back(image);
  }
  return fm;
}

std::vector<AutSizeCheck> aut_sizes(const SubgroupCategory& c) {
  const auto& ctx = *c.ctx;
  std::vector<AutSizeCheck> out;
  for (ObjId a = 0; a < static_cast<ObjId>(c.subgroup_of.size()); ++a) {
    const std::size_t i = c.subgroup_of[a];
    const std::size_t n = ctx.normalizers[i].order();
    const std::size_t h = ctx.subgroup(i).order();
    const std::size_t cen = ctx.centralizers[i].order();
    std::size_t expected = 0;
    switch (c.flavor) {
      case Flavor::S: expected = 1; break;
      case Flavor::T: expected = n; break;
      case Flavor::L: expected = n / ctx.op_centralizers[i].order(); break;
      case Flavor::F: expected = n / cen; break;
      case Flavor::O: expected = n / h; break;
      case Flavor::FTilde: {
        // |H C_G(H)| = |H| |C_G(H)| / |Z(H)|
        const std::size_t hc = h * cen / center(ctx.group, ctx.subgroup(i)).order();
        expected = n / hc;
        break;
      }
    }
    const std::size_t actual = c.cat().hom_count(a, a);
    if (actual != expected) {
      throw Error(ErrorCode::MismatchedAutGroup, "object H" + std::to_string(i) + ": |C(H)| = " +
                                                     std::to_string(actual) + ", expected " + std::to_string(expected));
    }
    out.push_back({a, actual, expected});
  }
  return out;
}

ExtensionCheck fusion_extends(const PGroupContext& ctx, std::size_t h, std::size_t n, std::size_t k, ElemId g) {
  const PermGroup& G = ctx.group;
  const Subgroup& P = ctx.sylow();
  const Subgroup& H = ctx.subgroup(h);
  const Subgroup& N = ctx.subgroup(n);
  const Subgroup& K = ctx.subgroup(k);
  if (!ctx.lattice.attrs(h).is_G_selfcentralizing) {
    throw Error(ErrorCode::PreconditionViolated, "H is not selfcentralizing");
  }
  if (!H.is_subset_of(N) || !N.is_subset_of(normalizer_in(G, P, H)) || !K.is_subset_of(P)) {
    throw Error(ErrorCode::PreconditionViolated, "need H <= N <= N_P(H) and K <= P");
  }
  const Subgroup image = conjugate(G, H, g);
  if (!image.is_subset_of(K)) throw Error(ErrorCode::PreconditionViolated, "g does not transport H into K");

  ExtensionCheck out;
  const Subgroup& cen_h = ctx.centralizers[h];
  for (ElemId x : transporter(G, N, K)) {
    if (cen_h.contains(G.mul(x, G.inv(g)))) {
      out.extends = true;
      break;
    }
  }

  const Subgroup cen_image = centralizer(G, image);
  const Subgroup norm_k = normalizer_in(G, K, image);
  out.condition = true;
  for (ElemId x : N.members()) {
    const ElemId y = G.conj(x, g);
    bool inside = false;
    for (ElemId m : norm_k.members()) {
      if (cen_image.contains(G.mul(y, G.inv(m)))) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      out.condition = false;
      break;
    }
  }
  if (out.extends != out.condition) {
    throw Error(ErrorCode::EquivalenceViolation, "extension search and subgroup condition disagree");
  }
  return out;
}

}  // namespace pcat
