#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/group_io.hpp"

namespace pcat {

struct CatalogEntry {
  std::string name;         // CLI key, e.g. "c2xs3"
  std::string description;  // e.g. "C2 x Sigma3"
  GroupSpec spec;
};

/// Built-in desk-scale groups.
const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> find_in_catalog(std::string_view name);

/// Catalog name or group file path.
GroupSpec resolve_group(const std::string& name_or_path);

/// Distinct primes dividing n, ascending.
std::vector<int> prime_divisors(std::size_t n);

}  // namespace pcat
