#pragma once

#include <map>
#include <string>

#include "qmrat/ratfunc.hpp"

namespace qmrat {

// Bindings for parameter names that should read as constants.
using ParamMap = std::map<std::string, Rat>;

// Parses the CLI expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* atom ('^' ('-'? integer))?
//   atom   := integer | symbol | '(' expr ')'
// Symbols resolve through params first, then the tower.
RatFunc parse_expr(const TowerSpec& t, const std::string& text,
                   const ParamMap* params = nullptr);

// Parses an expression that must be polynomial (constant denominator);
// used for tower relations.
MultiPoly parse_poly(const TowerSpec& t, const std::string& text,
                     const ParamMap* params = nullptr);

std::string to_string(const MultiPoly& p, const TowerSpec& t);
std::string to_string(const RatFunc& f);

} // namespace qmrat
