#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/euler.hpp"
#include "pcat/nerve.hpp"
#include "pcat/subgroup_categories.hpp"

using namespace pcat;

namespace {

std::shared_ptr<const PGroupContext> context(const char* name, int p) {
  return make_context(find_in_catalog(name)->spec.enumerate(), p);
}

FiniteCategory cyclic_group(int n) {
  FiniteCategory::Builder b;
  b.add_object("*");
  for (int i = 0; i < n; ++i) b.add_morphism(0, 0);
  b.set_identity(0, 0);
  return std::move(b).build([n](MorId f, MorId g) { return (f + g) % n; });
}

FiniteCategory chain(int n) {
  FiniteCategory::Builder b;
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      b.add_morphism(i, j);
      ends.emplace_back(i, j);
    }
  auto id_of = [&](int i, int j) {
    return static_cast<MorId>(std::find(ends.begin(), ends.end(), std::pair{i, j}) - ends.begin());
  };
  for (int i = 0; i < n; ++i) b.set_identity(i, id_of(i, i));
  return std::move(b).build([&](MorId f, MorId g) { return id_of(ends[f].first, ends[g].second); });
}

// n objects and identities only.
FiniteCategory discrete(int n) {
  FiniteCategory::Builder b;
  for (int i = 0; i < n; ++i) b.set_identity(b.add_object(std::to_string(i)), b.add_morphism(i, i));
  return std::move(b).build([](MorId f, MorId) { return f; });
}

NerveOptions opts(int dmax, int prime) {
  NerveOptions o;
  o.dmax = dmax;
  o.prime = prime;
  return o;
}

using Betti = std::vector<long long>;

}  // namespace

TEST_CASE("small nerves") {
  CHECK(betti(cyclic_group(1), opts(3, 0)).betti == Betti{1, 0, 0, 0});
  CHECK(betti(discrete(3), opts(2, 0)).betti == Betti{3, 0, 0});
  CHECK(betti(discrete(3), opts(2, 0)).reduced() == Betti{2, 0, 0});
  CHECK(betti(chain(4), opts(3, 2)).betti == Betti{1, 0, 0, 0});
  CHECK(chain_counts(chain(3), 3) == std::vector<std::uint64_t>{3, 3, 1, 0});
  CHECK(nerve_euler_characteristic(chain(3)) == 1);
  CHECK(nerve_euler_characteristic(discrete(4)) == 4);
  CHECK_THROWS_AS(nerve_euler_characteristic(cyclic_group(2)), Error);
  CHECK(field_name(0) == "Q");
  CHECK(field_name(5) == "F5");
}

TEST_CASE("classifying spaces of cyclic groups") {
  NerveOptions o = opts(4, 2);
  o.use_shortcut = false;
  CHECK(betti(cyclic_group(2), o).betti == Betti{1, 1, 1, 1, 1});
  o.prime = 0;
  CHECK(betti(cyclic_group(2), o).betti == Betti{1, 0, 0, 0, 0});
  o.prime = 3;
  CHECK(betti(cyclic_group(3), o).betti == Betti{1, 1, 1, 1, 1});
  CHECK(betti(cyclic_group(2), o).betti == Betti{1, 0, 0, 0, 0});
  CHECK(betti(cyclic_group(2), opts(4, 2)).betti == Betti{1, 1, 1, 1, 1});
}

TEST_CASE("shortcut and skeleton") {
  // the trivial subgroup is initial in S, so the nerve is contractible
  const auto s = build(context("s4", 2), Flavor::S, ObjectFilter::all());
  const auto r = betti(s.cat(), opts(3, 0));
  CHECK(r.shortcut);
  CHECK(r.betti == Betti{1, 0, 0, 0});

  const auto t = build(context("s3", 2), Flavor::T, ObjectFilter::of(ObjectFilter::Kind::Star));
  NerveOptions full = opts(3, 2);
  full.use_skeleton = false;
  full.use_shortcut = false;
  const auto a = betti(t.cat(), full);
  const auto b = betti(t.cat(), opts(3, 2));
  CHECK(b.skeleton);
  CHECK(a.betti == b.betti);
  // three conjugate involutions: the transporter category is a connected
  // groupoid with automorphism group C2
  CHECK(a.betti == Betti{1, 1, 1, 1});
}

TEST_CASE("Quillen's complex of Sigma4 is contractible") {
  const auto ctx = context("s4", 2);
  const auto s = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Star));
  for (int p : {0, 2, 3}) {
    INFO(p);
    const auto r = betti(s.cat(), opts(4, p));
    CHECK(r.reduced() == Betti{0, 0, 0, 0, 0});
  }
  CHECK(nerve_euler_characteristic(s.cat()) == 1);

  const auto rad = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::StarRad));
  const auto m = induced_map(induced_functor(rad, s), opts(3, 2));
  CHECK(m.iso);
  CHECK(m.rank == Betti{1, 0, 0, 0});
}

TEST_CASE("a disconnected selfcentralizing poset") {
  const auto ctx = context("c2xs3", 2);
  const auto sfc = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Sfc));
  const auto star = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Star));
  CHECK(betti(sfc.cat(), opts(3, 0)).betti[0] == 3);
  CHECK(betti(star.cat(), opts(3, 0)).betti[0] == 1);
  const auto m = induced_map(induced_functor(sfc, star), opts(3, 2));
  CHECK_FALSE(m.iso);
  CHECK(m.rank[0] == 1);
  CHECK(m.source_betti[0] == 3);
}

TEST_CASE("induced maps") {
  const auto ctx = context("s3", 2);
  const auto t = build(ctx, Flavor::T, ObjectFilter::of(ObjectFilter::Kind::Star));
  const auto same = induced_functor(t, t);
  const auto id = induced_map(same, opts(3, 2));
  CHECK(id.iso);
  CHECK(id.rank == id.source_betti);

  // T -> O collapses the automorphism group C2 of each involution
  const auto o = build(ctx, Flavor::O, ObjectFilter::of(ObjectFilter::Kind::Star));
  const auto q = induced_map(induced_functor(t, o), opts(3, 2));
  CHECK(q.source_betti == Betti{1, 1, 1, 1});
  CHECK(q.target_betti == Betti{1, 0, 0, 0});
  CHECK(q.rank == Betti{1, 0, 0, 0});
  CHECK_FALSE(q.iso);
  CHECK(induced_map_json(q)["iso"] == false);
}

TEST_CASE("dense cross-check") {
  struct Case {
    const char* group;
    int p;
    Flavor flavor;
    const char* filter;
    int dmax;
  };
  const Case cases[] = {
      {"s3", 2, Flavor::S, "all", 3},    {"s3", 2, Flavor::T, "star", 3},   {"s3", 2, Flavor::L, "all", 2},
      {"s3", 2, Flavor::F, "all", 3},    {"s3", 2, Flavor::O, "all", 2},    {"s3", 3, Flavor::O, "all", 2},
      {"s3", 2, Flavor::FTilde, "all", 3}, {"d8", 2, Flavor::S, "star", 3}, {"d8", 2, Flavor::F, "star", 2},
      {"c2xc2", 2, Flavor::O, "interval:[1..P)", 3}, {"c2xs3", 2, Flavor::S, "sfc", 3},
      {"a4", 2, Flavor::FTilde, "star", 3},
  };
  for (const auto& c : cases) {
    const auto cat = build(context(c.group, c.p), c.flavor, parse_filter(c.filter));
    for (int prime : {0, 2, 3}) {
      INFO(c.group << " " << to_string(c.flavor) << "[" << c.filter << "] over " << field_name(prime));
      NerveOptions plain = opts(c.dmax, prime);
      plain.use_shortcut = false;
      plain.use_skeleton = false;
      const auto dense = betti_dense(cat.cat(), prime, c.dmax);
      CHECK(betti(cat.cat(), plain).betti == dense);
      CHECK(betti(cat.cat(), opts(c.dmax, prime)).betti == dense);
    }
  }
}

TEST_CASE("boundary of a boundary") {
  const auto ctx = context("s3", 2);
  for (Flavor f : kAllFlavors) {
    INFO(to_string(f));
    CHECK(boundary_squared_violations(build(ctx, f, ObjectFilter::all()).cat(), 4) == 0);
  }
  CHECK(boundary_squared_violations(cyclic_group(3), 5) == 0);
}

TEST_CASE("chain budget") {
  const auto o = build(context("s4", 2), Flavor::O, ObjectFilter::all());
  NerveOptions small = opts(3, 2);
  small.budget = 100;
  small.use_shortcut = false;
  try {
    betti(o.cat(), small);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }

  ::unsetenv("PCAT_BUDGET_CHAINS");
  CHECK(default_chain_budget() == kDefaultChainBudget);
  ::setenv("PCAT_BUDGET_CHAINS", "1234", 1);
  CHECK(default_chain_budget() == 1234);
  CHECK(NerveOptions{}.budget == 1234);
  ::setenv("PCAT_BUDGET_CHAINS", "12x", 1);
  CHECK_THROWS_AS(default_chain_budget(), Error);
  ::setenv("PCAT_BUDGET_CHAINS", "0", 1);
  CHECK_THROWS_AS(default_chain_budget(), Error);
  ::unsetenv("PCAT_BUDGET_CHAINS");
}

TEST_CASE("naturality along S -> T -> O") {
  for (const char* g : {"s3", "s4", "a4"}) {
    const auto ctx = context(g, 2);
    const auto rad = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::StarRad));
    const auto s = build(ctx, Flavor::S, ObjectFilter::of(ObjectFilter::Kind::Star));
    const auto t = build(ctx, Flavor::T, ObjectFilter::of(ObjectFilter::Kind::Star));
    const auto o = build(ctx, Flavor::O, ObjectFilter::of(ObjectFilter::Kind::Star));

    const auto st = induced_functor(s, t);
    const auto to = induced_functor(t, o);
    const auto so = compose(st, to);
    const auto direct = induced_functor(s, o);
    CHECK(so.obj_map == direct.obj_map);
    CHECK(so.mor_map == direct.mor_map);

    for (int prime : {0, 2}) {
      INFO(g << " over " << field_name(prime));
      const auto r_st = induced_map(st, opts(2, prime));
      const auto r_to = induced_map(to, opts(2, prime));
      const auto r_so = induced_map(so, opts(2, prime));
      for (int n = 0; n <= 2; ++n) CHECK(r_so.rank[n] <= std::min(r_st.rank[n], r_to.rank[n]));
      if (r_st.iso) CHECK(r_so.rank == r_to.rank);

      // precomposing with an equivalence in homology leaves ranks unchanged
      const auto inc = induced_functor(rad, s);
      REQUIRE(induced_map(inc, opts(2, prime)).iso);
      CHECK(induced_map(compose(inc, so), opts(2, prime)).rank == r_so.rank);
    }
  }
}
