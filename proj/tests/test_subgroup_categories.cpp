#include <doctest.h>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/group_io.hpp"
#include "pcat/subgroup_categories.hpp"

using namespace pcat;

namespace {

std::shared_ptr<const PGroupContext> context(const char* name, int p) {
  return make_context(find_in_catalog(name)->spec.enumerate(), p);
}

std::size_t index_of_order(const PGroupContext& ctx, std::size_t order) {
  for (std::size_t i = 0; i < ctx.lattice.size(); ++i)
    if (ctx.lattice.attrs(i).order == order && ctx.lattice.leq(i, ctx.lattice.sylow_index())) return i;
  return ctx.lattice.size();
}

ObjectFilter star() { return ObjectFilter::of(ObjectFilter::Kind::Star); }

}  // namespace

TEST_CASE("flavor and filter names") {
  for (Flavor f : kAllFlavors) CHECK(parse_flavor(to_string(f)) == f);
  CHECK_THROWS_AS(parse_flavor("x"), Error);

  for (auto k : kStandardFilters) CHECK(parse_filter(to_string(ObjectFilter::of(k))).kind == k);
  CHECK(to_string(parse_filter("star-eab")) == "star-eab");

  auto f = parse_filter("interval:1..P");
  CHECK(f.kind == ObjectFilter::Kind::Interval);
  CHECK(f.lower_closed);
  CHECK_FALSE(f.upper_closed);
  f = parse_filter("interval:(1..P]");
  CHECK_FALSE(f.lower_closed);
  CHECK(f.upper_closed);
  CHECK(to_string(f) == "interval:(1..P]");
  CHECK_THROWS_AS(parse_filter("bogus"), Error);
  CHECK_THROWS_AS(parse_filter("interval:[..P)"), Error);
}

TEST_CASE("filters select subgroups") {
  const auto ctx = context("s4", 2);
  using K = ObjectFilter::Kind;
  CHECK(filter_objects(*ctx, Flavor::S, ObjectFilter::all()).size() == 20);
  CHECK(filter_objects(*ctx, Flavor::S, ObjectFilter::of(K::Star)).size() == 19);
  CHECK(filter_objects(*ctx, Flavor::S, ObjectFilter::of(K::StarEab)).size() == 13);
  // normal V4 and the three D8
  CHECK(filter_objects(*ctx, Flavor::S, ObjectFilter::of(K::Rad)).size() == 4);
  // plus every subgroup of order 2, whose normalizer equals its centralizer
  CHECK(filter_objects(*ctx, Flavor::F, ObjectFilter::of(K::StarRad)).size() == 13);
  // interval [1, P) inside the chosen Sylow D8: 1, five of order 2, three of order 4
  CHECK(filter_objects(*ctx, Flavor::S, parse_filter("interval:[1..P)")).size() == 9);
  CHECK(filter_objects(*ctx, Flavor::S, parse_filter("interval:(1..P]")).size() == 9);
  CHECK_THROWS_AS(filter_objects(*ctx, Flavor::S, parse_filter("interval:1..99")), Error);
}

TEST_CASE("Klein four orbit category on [1, V)") {
  const auto ctx = context("c2xc2", 2);
  const auto c = build(ctx, Flavor::O, parse_filter("interval:[1..P)"));
  CHECK(validate(c.cat()).valid);
  REQUIRE(c.cat().num_objects() == 4);
  CHECK(c.subgroup_of[0] == 0);
  for (ObjId a = 0; a < 4; ++a)
    for (ObjId b = 0; b < 4; ++b) {
      std::size_t expected = 0;
      if (a == 0) expected = b == 0 ? 4 : 2;
      else if (a == b) expected = 2;
      CHECK(c.cat().hom_count(a, b) == expected);
    }
}

TEST_CASE("Sigma3 at p = 2") {
  const auto ctx = context("s3", 2);
  const std::pair<Flavor, std::size_t> morphisms[] = {{Flavor::S, 3},  {Flavor::T, 18}, {Flavor::L, 18},
                                                      {Flavor::F, 9},  {Flavor::O, 9},  {Flavor::FTilde, 9}};
  for (auto [flavor, count] : morphisms) {
    INFO(to_string(flavor));
    const auto c = build(ctx, flavor, star());
    CHECK(c.cat().num_objects() == 3);
    CHECK(c.cat().num_morphisms() == count);
    CHECK(validate(c.cat()).valid);
    CHECK(is_EI(c.cat()));
  }

  const auto f = build(ctx, Flavor::F, star());
  const auto ft = build(ctx, Flavor::FTilde, star());
  const auto q = induced_functor(f, ft);
  CHECK(validate_functor(q).valid);
  CHECK(is_full(q));
  CHECK(is_faithful(q));

  const auto t = build(ctx, Flavor::T, star());
  const auto checks = aut_sizes(t);
  REQUIRE(checks.size() == 3);
  for (const auto& a : checks) {
    CHECK(a.actual == 2);
    CHECK(a.expected == 2);
  }
}

TEST_CASE("automorphism groups in Sigma4") {
  const auto ctx = context("s4", 2);
  const std::size_t d8 = ctx->lattice.sylow_index();
  const auto f = build(ctx, Flavor::F, ObjectFilter::all());
  const auto ft = build(ctx, Flavor::FTilde, ObjectFilter::all());
  CHECK(f.cat().hom_count(f.object_of(d8), f.object_of(d8)) == 4);
  CHECK(ft.cat().hom_count(ft.object_of(d8), ft.object_of(d8)) == 1);

  const auto q = induced_functor(f, ft);
  CHECK(validate_functor(q).valid);
  CHECK(is_full(q));
  CHECK_FALSE(is_faithful(q));

  const auto o = build(ctx, Flavor::O, ObjectFilter::all());
  std::size_t v4 = 0;
  for (std::size_t i = 0; i < ctx->lattice.size(); ++i)
    if (ctx->lattice.attrs(i).order == 4 && ctx->lattice.attrs(i).is_G_radical) v4 = i;
  REQUIRE(v4 != 0);
  CHECK(o.cat().hom_count(o.object_of(v4), o.object_of(v4)) == 6);

  for (Flavor flavor : kAllFlavors) {
    INFO(to_string(flavor));
    const auto c = build(ctx, flavor, ObjectFilter::all());
    CHECK(aut_sizes(c).size() == c.cat().num_objects());
    CHECK(validate(c.cat(), 2'000'000).valid);
  }
}

TEST_CASE("radical orbit category of Sigma4") {
  const auto ctx = context("s4", 2);
  const auto o = build(ctx, Flavor::O, ObjectFilter::of(ObjectFilter::Kind::Rad));
  CHECK(o.cat().num_objects() == 4);
  CHECK(iso_classes(o.cat()).num_classes() == 2);
}

TEST_CASE("morphism lookup by element") {
  const auto ctx = context("s3", 2);
  const auto t = build(ctx, Flavor::T, star());
  const auto& G = ctx->group;
  for (MorId m = 0; m < static_cast<MorId>(t.cat().num_morphisms()); ++m) {
    const ObjId a = t.cat().dom(m), b = t.cat().cod(m);
    CHECK(t.find_morphism(a, b, t.rep[m]) == m);
    CHECK(conjugate(G, ctx->subgroup(t.subgroup_of[a]), t.rep[m]) == ctx->subgroup(t.subgroup_of[b]));
  }
  const auto o = build(ctx, Flavor::O, star());
  for (MorId m = 0; m < static_cast<MorId>(o.cat().num_morphisms()); ++m) {
    const ObjId b = o.cat().cod(m);
    for (ElemId k : ctx->subgroup(o.subgroup_of[b]).members())
      CHECK(o.find_morphism(o.cat().dom(m), b, G.mul(o.rep[m], k)) == m);
  }
}

TEST_CASE("induced functors") {
  const auto ctx = context("s4", 2);
  for (Flavor from : kAllFlavors)
    for (Flavor to : kAllFlavors) {
      if (!flavor_maps_to(from, to)) continue;
      INFO(to_string(from) << " -> " << to_string(to));
      const auto src = build(ctx, from, ObjectFilter::of(ObjectFilter::Kind::StarRad));
      const auto dst = build(ctx, to, star());
      const auto f = induced_functor(src, dst);
      CHECK(validate_functor(f).valid);
    }
  CHECK(flavor_maps_to(Flavor::S, Flavor::FTilde));
  CHECK(flavor_maps_to(Flavor::T, Flavor::O));
  CHECK_FALSE(flavor_maps_to(Flavor::O, Flavor::F));
  CHECK_FALSE(flavor_maps_to(Flavor::L, Flavor::O));

  const auto o = build(ctx, Flavor::O, star());
  const auto f = build(ctx, Flavor::F, star());
  CHECK_THROWS_AS(induced_functor(o, f), Error);
  const auto small = build(ctx, Flavor::S, star());
  const auto rad = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::StarRad));
  CHECK_THROWS_AS(induced_functor(small, rad), Error);
}

TEST_CASE("extension criterion") {
  const auto ctx = context("s4", 2);
  const std::size_t p = ctx->lattice.sylow_index();
  std::size_t v4 = ctx->lattice.size();
  for (std::size_t i = 0; i < ctx->lattice.size(); ++i)
    if (ctx->lattice.attrs(i).order == 4 && ctx->lattice.attrs(i).is_G_radical) v4 = i;
  REQUIRE(ctx->lattice.leq(v4, p));

  auto e = fusion_extends(*ctx, v4, p, p, PermGroup::identity());
  CHECK(e.extends);
  CHECK(e.condition);
  e = fusion_extends(*ctx, v4, p, v4, PermGroup::identity());
  CHECK_FALSE(e.extends);
  CHECK_FALSE(e.condition);

  CHECK_THROWS_AS(fusion_extends(*ctx, 0, 0, p, PermGroup::identity()), Error);
  CHECK(index_of_order(*ctx, 8) == p);
}
