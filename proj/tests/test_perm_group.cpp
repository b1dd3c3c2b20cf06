#include <doctest.h>

#include <set>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"
#include "pcat/group_io.hpp"
#include "pcat/perm_group.hpp"

using namespace pcat;

namespace {

PermGroup named(const char* name) { return find_in_catalog(name)->spec.enumerate(); }

Subgroup generated(const PermGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<ElemId> ids;
  for (const char* c : cycles) ids.push_back(g.index_of(parse_permutation(c, g.degree())));
  return closure(g, ids);
}

// Every element commuting with all of h, by brute force.
std::size_t brute_centralizer_order(const PermGroup& g, const Subgroup& h) {
  std::size_t n = 0;
  for (ElemId x = 0; x < static_cast<ElemId>(g.order()); ++x) {
    bool ok = true;
    for (ElemId y : h.members()) ok = ok && g.mul(x, y) == g.mul(y, x);
    n += ok;
  }
  return n;
}

}  // namespace

TEST_CASE("enumeration") {
  const auto trivial = PermGroup::enumerate({}, 3);
  CHECK(trivial.order() == 1);
  CHECK(named("s3").order() == 6);
  CHECK(named("s4").order() == 24);
  CHECK(PermGroup::identity() == 0);
  CHECK(named("s4").element(0).is_identity());

  const auto s4 = named("s4");
  for (ElemId i = 1; i < static_cast<ElemId>(s4.order()); ++i) CHECK(s4.element(i - 1) < s4.element(i));
}

TEST_CASE("element cap and degree mismatch") {
  const Permutation c5({1, 2, 3, 4, 0});
  const Permutation t5({1, 0, 2, 3, 4});
  const std::vector<Permutation> gens{c5, t5};
  CHECK_THROWS_AS(PermGroup::enumerate(gens, 5, 100), Error);
  CHECK(PermGroup::enumerate(gens, 5, 120).order() == 120);
  const std::vector<Permutation> bad{Permutation({1, 0})};
  CHECK_THROWS_AS(PermGroup::enumerate(bad, 3), Error);
}

TEST_CASE("centralizers") {
  const auto s3 = named("s3");
  CHECK(centralizer(s3, trivial_subgroup(s3)).order() == 6);
  const auto c3 = generated(s3, {"(0 1 2)"});
  CHECK(centralizer(s3, c3).order() == 3);
  CHECK(centralizer(s3, c3).order() == brute_centralizer_order(s3, c3));

  const auto g = named("c2xs3");
  CHECK(g.order() == 12);
  CHECK(center(g, whole_group(g)).order() == 2);
  CHECK(centralizer(g, center(g, whole_group(g))).order() == 12);
}

TEST_CASE("normalizers and transporters") {
  const auto s3 = named("s3");
  const auto t01 = generated(s3, {"(0 1)"});
  const auto t02 = generated(s3, {"(0 2)"});
  CHECK(normalizer(s3, whole_group(s3)).order() == 6);
  CHECK(normalizer(s3, t01).order() == 2);
  CHECK(transporter(s3, t01, t02).size() == 2);
  CHECK(transporter(s3, trivial_subgroup(s3), t02).size() == 6);
  CHECK(transporter(s3, generated(s3, {"(0 1 2)"}), t01).empty());

  const auto s4 = named("s4");
  const auto v4 = generated(s4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  CHECK(v4.order() == 4);
  CHECK(normalizer(s4, v4).order() == 24);
  CHECK(is_normal_in(s4, v4, whole_group(s4)));
}

TEST_CASE("p-cores") {
  const auto s3 = named("s3");
  const auto s4 = named("s4");
  CHECK(o_p(s3, whole_group(s3), 2).is_trivial());
  CHECK(o_p(s4, whole_group(s4), 2).order() == 4);
  const auto d8 = named("d8");
  CHECK(o_p(d8, whole_group(d8), 2).order() == 8);

  CHECK(o_upper_p(named("c2"), whole_group(named("c2")), 2).is_trivial());
  CHECK(o_upper_p(s3, whole_group(s3), 2).order() == 3);
  CHECK(o_upper_p(s3, whole_group(s3), 3).order() == 6);
}

TEST_CASE("center, Frattini and Sylow") {
  const auto q8 = named("q8");
  CHECK(q8.order() == 8);
  CHECK(q8.degree() == 8);
  CHECK(center(q8, whole_group(q8)).order() == 2);
  CHECK(frattini(q8, whole_group(q8)).order() == 2);
  const auto v = named("c2xc2");
  CHECK(frattini(v, whole_group(v)).is_trivial());

  const auto s4 = named("s4");
  CHECK(sylow(s4, 2).order() == 8);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(all_sylows(s4, whole_group(s4), 2).size() == 3);
  CHECK(all_sylows(s4, whole_group(s4), 3).size() == 4);
  CHECK_THROWS_AS(sylow(s4, 5, true), Error);
}

TEST_CASE("quotients") {
  const auto s4 = named("s4");
  const auto v4 = generated(s4, {"(0 1)(2 3)", "(0 2)(1 3)"});
  const auto q = quotient_group(s4, whole_group(s4), v4);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(is_abelian(q.group, whole_group(q.group)));
  CHECK(quotient_group(s4, whole_group(s4), whole_group(s4)).group.order() == 1);

  const auto c4 = named("c4");
  const auto c2 = generated(c4, {"(0 2)(1 3)"});
  CHECK(quotient_group(c4, whole_group(c4), c2).group.order() == 2);

  const auto t01 = generated(s4, {"(0 1)"});
  CHECK_THROWS_AS(quotient_group(s4, whole_group(s4), t01), Error);
}

TEST_CASE("structure predicates") {
  CHECK(is_cyclic(named("c8"), whole_group(named("c8"))));
  CHECK_FALSE(is_cyclic(named("q8"), whole_group(named("q8"))));
  CHECK(exponent(named("c2xc2"), whole_group(named("c2xc2"))) == 2);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(is_p_power(27, 3));
  CHECK_FALSE(is_p_power(12, 2));
  CHECK(p_part(24, 2) == 8);
}

TEST_CASE("subgroup enumeration agrees with a subset-closure count") {
  const auto s3 = named("s3");
  CHECK(all_subgroups(s3, whole_group(s3)).size() == 6);
  const auto d8 = named("d8");
  CHECK(all_subgroups(d8, whole_group(d8)).size() == 10);
}
