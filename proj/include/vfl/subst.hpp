#pragma once

#include "vfl/formula.hpp"
#include "vfl/term.hpp"

#include <string>

namespace vfl {

// r with every free occurrence of x replaced by t. Total and deliberately
// capture-unsafe: whether the result means the right thing is exactly what
// substitutable() decides, and callers that skip the check get the naive
// rewriting the regression demo warns about. An ellipsis whose binder is x
// keeps its body untouched and substitutes in the bound only; any other
// binder substitutes in body and bound.
Term substitute(const Term& r, const std::string& x, const Term& t);

// True when substituting t for x in r captures no variable under an
// ellipsis binder. Atoms accept everything; applications are conjunctive;
// for fn(u(0) ...y u(v)) at least one of: x not free in r; y == x and t is
// substitutable in v; y not free in t and t is substitutable in u and v.
bool substitutable(const Term& t, const std::string& x, const Term& r);

// Quantifier(y, body) is left unchanged when y == x, otherwise substitution
// descends; like the term case, no renaming ever happens.
Formula substitute_formula(const Formula& f, const std::string& x, const Term& t);

// Atomic clause: substitutable in every argument (both sides of =).
// Quantifier(y, body): true when x is not free in the formula, else y must
// not be free in t and t must be substitutable in the body.
bool substitutable_formula(const Term& t, const std::string& x, const Formula& f);

}  // namespace vfl
