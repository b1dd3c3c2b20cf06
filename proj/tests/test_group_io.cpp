#include <doctest.h>

#include "pcat/error.hpp"
#include "pcat/group_io.hpp"

using namespace pcat;

TEST_CASE("cycle and image notation") {
  const auto a = parse_permutation("(0 1)(2 3)", 4);
  const auto b = parse_permutation("[1,0,3,2]", 4);
  CHECK(a == b);
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK_THROWS_AS(parse_permutation("(0 4)", 4), Error);
  CHECK_THROWS_AS(parse_permutation("(0 1", 4), Error);
  CHECK_THROWS_AS(parse_permutation("(0 0)", 4), Error);
}

TEST_CASE("group files round trip") {
  const std::string text = "# Klein four\ndegree: 4\n(0 1)(2 3)\n\n(0 2)(1 3)\n";
  const auto spec = parse_group(text);
  CHECK(spec.degree == 4);
  CHECK(spec.generators.size() == 2);
  CHECK(spec.enumerate().order() == 4);
  const auto again = parse_group(format_group(spec));
  CHECK(again.generators == spec.generators);
  CHECK_THROWS_AS(parse_group("(0 1)\n"), Error);
  CHECK_THROWS_AS(read_group_file("/nonexistent/file.grp"), Error);
}
