#pragma once

#include <string>

#include <json.hpp>

#include "pcat/category.hpp"

namespace pcat {

/// {"objects": [labels], "morphisms": [{"dom","cod","label"}], "identity": [ids],
///  "composition": [[f, g, fg], ...]}
nlohmann::json category_to_json(const FiniteCategory& c);

/// Inverse of category_to_json. Throws ParseError on malformed input and when
/// a composable pair has no table entry.
FiniteCategory category_from_json(const nlohmann::json& j);

std::string write_category(const FiniteCategory& c);
FiniteCategory read_category(const std::string& text);

/// Same objects, morphisms and composition table, ids included.
bool identical(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace pcat
