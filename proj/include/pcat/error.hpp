#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcat {

enum class ErrorCode {
  CapExceeded,
  InvalidPermutation,
  ParseError,
  NotNormal,
  NotComparable,
  EquivalenceViolation,
  PreconditionViolated,
  MismatchedAutGroup,
  CycleDetected,
  NoWeighting,
  NonUniqueWeighting,
  BudgetExceeded,
  FilterUnsupported,
  UnknownFormat,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a check status or exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcat
