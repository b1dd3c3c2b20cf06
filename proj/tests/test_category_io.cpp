#include <doctest.h>

#include "pcat/catalog.hpp"
#include "pcat/category_io.hpp"
#include "pcat/error.hpp"
#include "pcat/subgroup_categories.hpp"

using namespace pcat;

TEST_CASE("round trip") {
  const auto ctx = make_context(find_in_catalog("s3")->spec.enumerate(), 2);
  for (Flavor f : kAllFlavors) {
    INFO(to_string(f));
    const auto c = build(ctx, f, ObjectFilter::all());
    const auto text = write_category(c.cat());
    const auto back = read_category(text);
    CHECK(identical(c.cat(), back));
    CHECK(validate(back).valid);
    CHECK(category_to_json(back) == category_to_json(c.cat()));
  }
}

TEST_CASE("json layout") {
  const nlohmann::json j = {{"objects", {"x", "y"}},
                            {"morphisms", {{{"dom", 0}, {"cod", 0}, {"label", "1x"}},
                                           {{"dom", 1}, {"cod", 1}, {"label", "1y"}},
                                           {{"dom", 0}, {"cod", 1}, {"label", "f"}}}},
                            {"identity", {0, 1}},
                            {"composition", {{0, 0, 0}, {0, 2, 2}, {1, 1, 1}, {2, 1, 2}}}};
  const auto c = category_from_json(j);
  CHECK(c.num_objects() == 2);
  CHECK(c.num_morphisms() == 3);
  CHECK(c.object(1).label == "y");
  CHECK(c.morphism(2).label == "f");
  CHECK(c.comp(0, 2) == 2);
  CHECK(validate(c).valid);
  CHECK_FALSE(identical(c, opposite(c)));

  auto missing = j;
  missing["composition"].erase(missing["composition"].begin() + 3);
  CHECK_THROWS_AS(category_from_json(missing), Error);

  auto bad_dom = j;
  bad_dom["morphisms"][2]["dom"] = 7;
  CHECK_THROWS_AS(category_from_json(bad_dom), Error);

  auto bad_type = j;
  bad_type["identity"] = "none";
  CHECK_THROWS_AS(category_from_json(bad_type), Error);

  CHECK_THROWS_AS(read_category("{not json"), Error);
  CHECK_THROWS_AS(read_category("[]"), Error);
}
