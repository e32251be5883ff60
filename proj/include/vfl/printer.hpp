#pragma once

#include "vfl/formula.hpp"
#include "vfl/term.hpp"

#include <string>

namespace vfl {

// Canonical concrete syntax; parse_term(print_term(t)) == t exactly.
std::string print_term(const Term& t);

// Canonical form uses prefix equality `=(u,v)` and minimal parentheses.
std::string print_formula(const Formula& f);

}  // namespace vfl
