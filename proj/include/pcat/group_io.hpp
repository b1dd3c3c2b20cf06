#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcat/perm_group.hpp"

namespace pcat {

/// Degree plus generator list, as read from a group file.
struct GroupSpec {
  std::string name;
  int degree = 0;
  std::vector<Permutation> generators;

  PermGroup enumerate(std::size_t cap = kDefaultElementCap) const {
    return PermGroup::enumerate(generators, degree, cap);
  }
};

/// One permutation in cycle notation "(0 1)(2 3)" or image-list form
/// "[1,0,3,2]". Throws ParseError / InvalidPermutation.
Permutation parse_permutation(std::string_view text, int degree);

/// Group file: a `degree: n` line, then one generator per line. Blank lines
/// and `#` comments are ignored.
GroupSpec parse_group(std::string_view text);
GroupSpec read_group_file(const std::string& path);

std::string format_group(const GroupSpec& spec);

}  // namespace pcat
