#include "pcat/group_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pcat/error.hpp"

namespace pcat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_point(std::string_view token, int degree) {
  token = trim(token);
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty point");
  int value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "bad point '" + std::string(token) + "'");
    }
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw Error(ErrorCode::ParseError, "point too large");
  }
  if (value >= degree) {
    throw Error(ErrorCode::InvalidPermutation,
                "point " + std::to_string(value) + " out of range for degree " + std::to_string(degree));
  }
  return value;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int degree) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty permutation");

  if (text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated image list");
    std::vector<int> images;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!trim(body).empty()) {
      const auto comma = body.find(',');
      images.push_back(parse_point(body.substr(0, comma), degree));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (static_cast<int>(images.size()) != degree) {
      throw Error(ErrorCode::InvalidPermutation, "image list length differs from degree");
    }
    return Permutation(std::move(images));
  }

  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::vector<char> used(degree, 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated cycle");
    std::vector<int> cycle;
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    std::string token;
    while (in >> token) {
      for (char& c : token)
        if (c == ',') c = ' ';
      std::istringstream sub(token);
      std::string piece;
      while (sub >> piece) cycle.push_back(parse_point(piece, degree));
    }
    for (int x : cycle) {
      if (used[x]) throw Error(ErrorCode::InvalidPermutation, "cycles are not disjoint");
      used[x] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

GroupSpec parse_group(std::string_view text) {
  GroupSpec spec;
  bool have_degree = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_degree) {
      constexpr std::string_view key = "degree:";
      if (line.substr(0, key.size()) != key) throw Error(ErrorCode::ParseError, "first line must be 'degree: n'");
      const auto value = trim(line.substr(key.size()));
      spec.degree = parse_point(value, 1'000'001);
      if (spec.degree < 1) throw Error(ErrorCode::ParseError, "degree must be positive");
      have_degree = true;
      continue;
    }
    spec.generators.push_back(parse_permutation(line, spec.degree));
  }
  if (!have_degree) throw Error(ErrorCode::ParseError, "missing 'degree: n' line");
  return spec;
}

GroupSpec read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open group file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto spec = parse_group(buffer.str());
  spec.name = path;
  return spec;
}

std::string format_group(const GroupSpec& spec) {
  std::string out = "degree: " + std::to_string(spec.degree) + "\n";
  for (const auto& g : spec.generators) out += g.to_cycle_string() + "\n";
  return out;
}

}  // namespace pcat
