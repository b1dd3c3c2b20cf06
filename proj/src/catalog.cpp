#include "pcat/catalog.hpp"

#include <array>
#include <filesystem>

#include "pcat/error.hpp"

namespace pcat {

namespace {

Permutation cycles(std::string_view text, int degree) { return parse_permutation(text, degree); }

GroupSpec make(std::string name, int degree, std::initializer_list<std::string_view> gens) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.degree = degree;
  for (auto g : gens) spec.generators.push_back(cycles(g, degree));
  return spec;
}

// Unit quaternions ±1, ±i, ±j, ±k as points 0..7 (sign * 4 + basis); the
// group acts on itself by right multiplication.
GroupSpec quaternion_regular() {
  // basis product table: entry = (sign, basis) for e_a * e_b, basis 0..3 = 1,i,j,k
  constexpr std::array<std::array<std::pair<int, int>, 4>, 4> table{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  auto right_mult = [&](int basis) {
    std::vector<int> images(8);
    for (int x = 0; x < 8; ++x) {
      const int sign = x / 4;
      const auto [s, b] = table[x % 4][basis];
      images[x] = ((sign + s) % 2) * 4 + b;
    }
    return Permutation(std::move(images));
  };
  GroupSpec spec;
  spec.name = "q8";
  spec.degree = 8;
  spec.generators = {right_mult(1), right_mult(2)};
  return spec;
}

// SL(2,3) acting on the 8 nonzero row vectors of F_3^2 by v -> vM.
GroupSpec sl23() {
  auto index = [](int a, int b) { return 3 * a + b - 1; };
  auto matrix_action = [&](int m00, int m01, int m10, int m11) {
    std::vector<int> images(8);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        const int x = (a * m00 + b * m10) % 3;
        const int y = (a * m01 + b * m11) % 3;
        images[index(a, b)] = index(x, y);
      }
    return Permutation(std::move(images));
  };
  GroupSpec spec;
  spec.name = "sl23";
  spec.degree = 8;
  spec.generators = {matrix_action(1, 1, 0, 1), matrix_action(0, 1, 2, 0)};
  return spec;
}

std::vector<CatalogEntry> build_catalog() {
  return {
      {"c2", "C2", make("c2", 2, {"(0 1)"})},
      {"c3", "C3", make("c3", 3, {"(0 1 2)"})},
      {"c4", "C4", make("c4", 4, {"(0 1 2 3)"})},
      {"c8", "C8", make("c8", 8, {"(0 1 2 3 4 5 6 7)"})},
      {"c9", "C9", make("c9", 9, {"(0 1 2 3 4 5 6 7 8)"})},
      {"c2xc2", "C2 x C2", make("c2xc2", 4, {"(0 1)", "(2 3)"})},
      {"c3xc3", "C3 x C3", make("c3xc3", 6, {"(0 1 2)", "(3 4 5)"})},
      {"d8", "D8 (dihedral of order 8)", make("d8", 4, {"(0 1 2 3)", "(0 2)"})},
      {"q8", "Q8 (regular representation)", quaternion_regular()},
      {"s3", "Sigma3", make("s3", 3, {"(0 1)", "(0 1 2)"})},
      {"s4", "Sigma4", make("s4", 4, {"(0 1 2 3)", "(0 1)"})},
      {"a4", "A4", make("a4", 4, {"(0 1 2)", "(0 1)(2 3)"})},
      {"c2xs3", "C2 x Sigma3", make("c2xs3", 5, {"(0 1)", "(2 3 4)", "(2 3)"})},
      {"sl23", "SL(2,3)", sl23()},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<CatalogEntry> find_in_catalog(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

GroupSpec resolve_group(const std::string& name_or_path) {
  if (auto entry = find_in_catalog(name_or_path)) return entry->spec;
  if (std::filesystem::exists(name_or_path)) return read_group_file(name_or_path);
  throw Error(ErrorCode::ConfigError, "unknown group '" + name_or_path + "' (not in catalog, no such file)");
}

std::vector<int> prime_divisors(std::size_t n) {
  std::vector<int> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace pcat
