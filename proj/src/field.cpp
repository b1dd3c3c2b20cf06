#include "pcat/field.hpp"

namespace pcat {

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0 || v.get_den() == 0)
    throw Error(ErrorCode::ParseError, "not a rational number: " + text);
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

}  // namespace pcat
