#include <doctest.h>

#include "pcat/catalog.hpp"
#include "pcat/error.hpp"

using namespace pcat;

TEST_CASE("catalog orders") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"c2", 2},  {"c3", 3},    {"c4", 4},   {"c8", 8},  {"c9", 9},  {"c2xc2", 4}, {"c3xc3", 9},
      {"d8", 8},  {"q8", 8},    {"s3", 6},   {"s4", 24}, {"a4", 12}, {"c2xs3", 12}, {"sl23", 24}};
  for (const auto& [name, order] : expected) {
    INFO(name);
    const auto e = find_in_catalog(name);
    REQUIRE(e.has_value());
    CHECK(e->spec.enumerate().order() == order);
  }
  CHECK(catalog().size() == std::size(expected));
}

TEST_CASE("standard generators") {
  const auto s4 = find_in_catalog("s4");
  CHECK(s4->spec.degree == 4);
  REQUIRE(s4->spec.generators.size() == 2);
  CHECK(s4->spec.generators[0].to_cycle_string() == "(0 1 2 3)");
  CHECK(s4->spec.generators[1].to_cycle_string() == "(0 1)");
  CHECK(find_in_catalog("q8")->spec.degree == 8);
  CHECK_FALSE(find_in_catalog("nope").has_value());
  CHECK_THROWS_AS(resolve_group("nope"), Error);
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(24) == std::vector<int>{2, 3});
  CHECK(prime_divisors(9) == std::vector<int>{3});
  CHECK(prime_divisors(1).empty());
}
