#pragma once

#include <string>
#include <string_view>

#include "lcgerm/bivar_poly.hpp"

namespace lcgerm {

// Names mapped onto the internal variables x and y.
struct VariableNames {
  std::string x = "x";
  std::string y = "y";
};

// Grammar (whitespace insignificant):
//   expr     := [sign] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' posint)?
// Implicit multiplication is rejected. Throws ParseError with the offset.
BivarPoly parse_poly(std::string_view text, const VariableNames& names = {});

}  // namespace lcgerm
