#include <doctest.h>

#include <set>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/euler.hpp"
#include "pcat/subgroup_categories.hpp"

using namespace pcat;

namespace {

std::shared_ptr<const PGroupContext> context(const char* name, int p) {
  return make_context(find_in_catalog(name)->spec.enumerate(), p);
}

SubgroupCategory built(const char* name, int p, Flavor f, const char* filter) {
  return build(context(name, p), f, parse_filter(filter));
}

FiniteCategory cyclic_group(int n) {
  FiniteCategory::Builder b;
  b.add_object("*");
  for (int i = 0; i < n; ++i) b.add_morphism(0, 0);
  b.set_identity(0, 0);
  return std::move(b).build([n](MorId f, MorId g) { return (f + g) % n; });
}

}  // namespace

TEST_CASE("Klein four orbit category") {
  const auto c = built("c2xc2", 2, Flavor::O, "interval:[1..P)");
  IntMatrix expected(4, 4);
  expected << 4, 2, 2, 2, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2;
  CHECK(class_matrix(c.cat()) == expected);

  const auto w = weighting(c.cat());
  CHECK(w.values == std::vector<Rational>{Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  const auto cw = coweighting(c.cat());
  for (const auto& v : cw.values) CHECK(v == Rational(1, 4));
  CHECK(w.total() == Rational(1));
  CHECK(cw.total() == Rational(1));
  CHECK(euler_chi(c.cat()) == Rational(1));
  CHECK(satisfies_defining_system(c.cat(), w));
  CHECK(satisfies_defining_system(c.cat(), cw));
  CHECK(weighting_json(w)["values"][0] == "-1/2");
}

TEST_CASE("groups have chi 1/|G|") {
  for (int n : {1, 2, 3, 6}) {
    const auto g = cyclic_group(n);
    CHECK(euler_chi(g) == Rational(1, n));
    CHECK(weighting(g).values.front() == Rational(1, n));
  }
  FiniteCategory empty = std::move(FiniteCategory::Builder{}).build([](MorId, MorId) { return kNoMorphism; });
  CHECK(euler_chi(empty) == Rational(0));
}

TEST_CASE("Sigma4 poset of nontrivial 2-subgroups") {
  const auto c = built("s4", 2, Flavor::S, "star");
  const auto w = weighting(c.cat());
  CHECK(w.total() == Rational(1));
  std::set<std::size_t> orders;
  for (std::size_t k : w.support()) {
    const auto rep = c.subgroup_of[w.classes.representative(k)];
    const auto order = c.ctx->lattice.attrs(rep).order;
    orders.insert(order);
    CHECK(c.ctx->lattice.attrs(rep).is_G_radical);
    CHECK(w.values[k] == (order == 8 ? Rational(1) : Rational(-2)));
  }
  // the normal four-group and the three Sylow subgroups
  CHECK(orders == std::set<std::size_t>{4, 8});
  CHECK(w.support().size() == 4);

  const auto e = euler_characteristic(c.cat());
  CHECK(e.consistent);
  CHECK(e.chi == Rational(1));
  CHECK(e.chi_reduced == Rational(0));
}

TEST_CASE("coweighting is the weighting of the opposite") {
  for (Flavor f : kAllFlavors) {
    INFO(to_string(f));
    const auto c = built("s4", 2, f, "all");
    const auto cw = coweighting(c.cat());
    const auto w_op = weighting(opposite(c.cat()));
    CHECK(cw.total() == w_op.total());
    CHECK(cw.values == w_op.values);
  }
}

TEST_CASE("elimination and slices agree with the triangular solve") {
  SliceMemo memo;
  for (const char* g : {"s3", "d8", "s4", "a4"}) {
    const auto ctx = context(g, 2);
    for (Flavor f : kAllFlavors)
      for (const char* filter : {"all", "star", "sfc"}) {
        INFO(g << " " << to_string(f) << " " << filter);
        const auto c = build(ctx, f, parse_filter(filter));
        if (c.cat().empty()) continue;
        const auto w = weighting(c.cat());
        CHECK(w.method == WeightMethod::TriangularEI);
        CHECK(weighting_by_elimination(c.cat()).values == w.values);
        CHECK(weighting_via_slices(c.cat(), 1, &memo).values == w.values);
        const auto cw = coweighting(c.cat());
        CHECK(coweighting_by_elimination(c.cat()).values == cw.values);
        CHECK(coweighting_via_slices(c.cat()).values == cw.values);
      }
  }
  CHECK(memo.size() > 0);
  const auto c = built("s4", 2, Flavor::O, "all");
  CHECK(weighting_via_slices(c.cat(), 3).values == weighting(c.cat()).values);
}

TEST_CASE("non-EI input") {
  // {1, e} with e e = e
  FiniteCategory::Builder b;
  b.add_object("*");
  b.add_morphism(0, 0);
  b.add_morphism(0, 0);
  b.set_identity(0, 0);
  const auto idem = std::move(b).build([](MorId f, MorId g) { return std::max(f, g); });
  const auto w = weighting(idem);
  CHECK(w.method == WeightMethod::GeneralSolve);
  CHECK(w.values.front() == Rational(1, 2));
  CHECK_THROWS_AS(weighting_via_slices(idem), Error);
}

TEST_CASE("p-group closed forms") {
  for (const char* name : {"c2", "c3", "c4", "c8", "c9", "c2xc2", "c3xc3", "d8", "q8"}) {
    INFO(name);
    const auto v = lemma41_values(find_in_catalog(name)->spec.enumerate());
    CHECK(v.holds);
    CHECK(v.chi_tilde_Ftilde == v.predicted_Ftilde);
    CHECK(v.chi_O == v.predicted_O);
    CHECK(v.chi_tilde_S == Rational(static_cast<long>(v.mu)));
  }
  const auto c2 = lemma41_values(find_in_catalog("c2")->spec.enumerate());
  CHECK(c2.mu == -1);
  CHECK(c2.chi_O == Rational(1, 2));
  const auto c4 = lemma41_values(find_in_catalog("c4")->spec.enumerate());
  CHECK(c4.cyclic);
  CHECK(c4.chi_O == Rational(1, 2));
  CHECK(c4.mu == 0);
  const auto q8 = lemma41_values(find_in_catalog("q8")->spec.enumerate());
  CHECK(q8.mu == 0);
  CHECK(q8.center_index == 4);
  CHECK(q8.chi_O == Rational(1));
  const auto v4 = lemma41_values(find_in_catalog("c2xc2")->spec.enumerate());
  CHECK(v4.mu == 2);
  CHECK(v4.chi_tilde_Ftilde == Rational(2));
  CHECK(v4.chi_O == Rational(1));
  const auto e9 = lemma41_values(find_in_catalog("c3xc3")->spec.enumerate());
  CHECK(e9.mu == 3);
  CHECK(e9.chi_O == Rational(1));
}

TEST_CASE("poset chi from strict slices") {
  for (const char* g : {"s3", "s4", "a4", "sl23", "c2xs3"}) {
    for (int p : prime_divisors(find_in_catalog(g)->spec.enumerate().order())) {
      INFO(g << " p=" << p);
      const auto c = built(g, p, Flavor::S, "star");
      Rational sum;
      for (ObjId b = 0; b < static_cast<ObjId>(c.cat().num_objects()); ++b)
        sum -= euler_chi(slice(c.cat(), b, true).category) - Rational(1);
      CHECK(sum == euler_chi(c.cat()));
    }
  }
}
