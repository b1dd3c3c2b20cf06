#include "pcat/permutation.hpp"

#include "pcat/error.hpp"

namespace pcat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MismatchedAutGroup: return "MismatchedAutGroup";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NoWeighting: return "NoWeighting";
    case ErrorCode::NonUniqueWeighting: return "NonUniqueWeighting";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FilterUnsupported: return "FilterUnsupported";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) {
      throw Error(ErrorCode::InvalidPermutation, "image list is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  for (int i = 0; i < degree; ++i) p.images_[i] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace pcat
