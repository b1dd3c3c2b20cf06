#include <doctest.h>

#include "pcat/error.hpp"
#include "pcat/permutation.hpp"

using pcat::Permutation;

TEST_CASE("right action: a*b applies a first") {
  const Permutation a({1, 0, 2});  // (0 1)
  const Permutation b({0, 2, 1});  // (1 2)
  const Permutation ab = a * b;
  CHECK(ab(0) == b(a(0)));
  CHECK(ab(0) == 2);
  CHECK(ab.to_cycle_string() == "(0 2 1)");
  CHECK((b * a).to_cycle_string() == "(0 1 2)");
}

TEST_CASE("inverse and identity") {
  const Permutation c({1, 2, 3, 0});
  CHECK((c * c.inverse()).is_identity());
  CHECK(Permutation::identity(5).to_cycle_string() == "()");
  CHECK(Permutation::identity(0).is_identity());
}

TEST_CASE("non-bijections are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), pcat::Error);
  CHECK_THROWS_AS(Permutation({0, 3}), pcat::Error);
}

TEST_CASE("ordering is lexicographic on images") {
  CHECK(Permutation({0, 1, 2}) < Permutation({0, 2, 1}));
  CHECK(Permutation({1, 0, 2}) > Permutation({0, 2, 1}));
}
