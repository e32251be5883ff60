#pragma once

#include "vfl/errors.hpp"
#include "vfl/formula.hpp"
#include "vfl/signature.hpp"
#include "vfl/term.hpp"

#include <string_view>

namespace vfl {

// Recursive-descent parsers for the concrete syntax. Both require a
// signature that validates and throw ParseError otherwise the input does
// not read uniquely.
//
// Ellipsis terms are written with the body twice, first applied to (0),
// then to the bound: `S(x(0) ...x x(5))`. The `(0)`/`(bound)` wrappers are
// notation and do not become application nodes. The two body copies must
// parse to identical ASTs. `S{x=0..5}(x)` is accepted as input sugar and
// never printed.
Term parse_term(std::string_view src, const Signature& sig);

// Atoms are `=(u,v)`, `p(u1,...,uk)`, infix `u = v`, and infix `u <= v`
// (sugar for `=( <=(u,v), 1 )`). Precedence: ~ > & > | > -> > <->, with
// quantifier bodies extending maximally after `forall x.` / `exists x.`.
Formula parse_formula(std::string_view src, const Signature& sig);

}  // namespace vfl
