#include "pcat/category_io.hpp"

#include <map>
#include <utility>

#include "pcat/error.hpp"

namespace pcat {

nlohmann::json category_to_json(const FiniteCategory& c) {
  nlohmann::json j;
  j["objects"] = nlohmann::json::array();
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) j["objects"].push_back(c.object(a).label);

  j["morphisms"] = nlohmann::json::array();
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    const auto& m = c.morphism(f);
    j["morphisms"].push_back({{"dom", m.dom}, {"cod", m.cod}, {"label", m.label}});
  }

  j["identity"] = nlohmann::json::array();
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) j["identity"].push_back(c.identity(a));

  j["composition"] = nlohmann::json::array();
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f)
    for (MorId g : c.out(c.cod(f))) j["composition"].push_back({f, g, c.comp(f, g)});
  return j;
}

FiniteCategory category_from_json(const nlohmann::json& j) {
  try {
    FiniteCategory::Builder b;
    const auto& objects = j.at("objects");
    const auto& morphisms = j.at("morphisms");
    const auto& identity = j.at("identity");
    const auto n = static_cast<long long>(objects.size());
    const auto m = static_cast<long long>(morphisms.size());

    for (const auto& label : objects) b.add_object(label.get<std::string>());
    for (const auto& mor : morphisms) {
      const auto dom = mor.at("dom").get<long long>();
      const auto cod = mor.at("cod").get<long long>();
      if (dom < 0 || dom >= n || cod < 0 || cod >= n) throw Error(ErrorCode::ParseError, "morphism endpoint out of range");
      b.add_morphism(static_cast<ObjId>(dom), static_cast<ObjId>(cod), mor.value("label", std::string{}));
    }
    if (static_cast<long long>(identity.size()) != n) throw Error(ErrorCode::ParseError, "one identity per object expected");
    for (long long a = 0; a < n; ++a) {
      const auto f = identity[a].get<long long>();
      if (f < 0 || f >= m) throw Error(ErrorCode::ParseError, "identity id out of range");
      b.set_identity(static_cast<ObjId>(a), static_cast<MorId>(f));
    }

    std::map<std::pair<MorId, MorId>, MorId> table;
    for (const auto& t : j.at("composition")) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorCode::ParseError, "composition entries are [f, g, fg]");
      const auto f = t[0].get<long long>(), g = t[1].get<long long>(), h = t[2].get<long long>();
      if (f < 0 || f >= m || g < 0 || g >= m || h < 0 || h >= m)
        throw Error(ErrorCode::ParseError, "composition id out of range");
      table[{static_cast<MorId>(f), static_cast<MorId>(g)}] = static_cast<MorId>(h);
    }
    return std::move(b).build([&](MorId f, MorId g) {
      auto it = table.find({f, g});
      if (it == table.end())
        throw Error(ErrorCode::ParseError,
                    "missing composite of " + std::to_string(f) + " and " + std::to_string(g));
      return it->second;
    });
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string write_category(const FiniteCategory& c) { return category_to_json(c).dump(1); }

FiniteCategory read_category(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return category_from_json(j);
}

bool identical(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
  for (ObjId x = 0; x < static_cast<ObjId>(a.num_objects()); ++x)
    if (a.object(x).label != b.object(x).label || a.identity(x) != b.identity(x)) return false;
  for (MorId f = 0; f < static_cast<MorId>(a.num_morphisms()); ++f) {
    if (a.dom(f) != b.dom(f) || a.cod(f) != b.cod(f) || a.morphism(f).label != b.morphism(f).label) return false;
    for (MorId g : a.out(a.cod(f)))
      if (a.comp(f, g) != b.comp(f, g)) return false;
  }
  return true;
}

}  // namespace pcat
