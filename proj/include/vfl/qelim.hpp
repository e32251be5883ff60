#pragma once

#include "vfl/formula.hpp"
#include "vfl/signature.hpp"
#include "vfl/term.hpp"

#include <string>
#include <variant>
#include <vector>

namespace vfl {

// Derivation tree witnessing membership in the bounded-quantifier fragment.
struct UqfCert {
    enum class Clause {
        Atom,
        And,
        Or,
        Not,
        Implies,
        Iff,
        BoundedExists,  // exists x (x <= y & body), x and y distinct variables
        BoundedForall,  // forall x (x <= y -> body)
    };
    Clause clause = Clause::Atom;
    std::string binder;  // bounded clauses only
    std::string bound;
    std::vector<UqfCert> children;
};

class UqfFormula {
  public:
    const Formula& formula() const { return formula_; }
    const UqfCert& certificate() const { return cert_; }
    const Signature& sig() const { return sig_; }

  private:
    UqfFormula(Formula f, UqfCert cert, Signature sig);
    Formula formula_;
    UqfCert cert_;
    Signature sig_;
    friend std::variant<UqfFormula, struct NotUqf> classify(const Formula&, const Signature&);
};

struct NotUqf {
    std::string reason;
    Formula offending;
};

// Accepts exactly the fragment built from atoms by the connectives and the
// two guarded quantifier shapes; the guard's bound must be a variable
// distinct from the binder, and no predicate atoms may appear. The
// signature must declare the binary order symbol `<=`.
std::variant<UqfFormula, NotUqf> classify(const Formula& f, const Signature& sig);

// Characteristic term: over the standard interpretations of +, d, <= and G,
// the term is 1 exactly where the formula holds and 0 elsewhere, with the
// same free variables. The output is the verbatim recursive construction
// (no simplification), so shapes can be compared against hand derivations:
//   u = v            -> d(u,v)
//   a & b            -> d(t_a + t_b, 2)
//   ~a               -> d(t_a, 0)
//   exists guarded   -> G(t_body(0) ...x t_body(y))
// with |, ->, <-> and the guarded forall reduced to those four.
Term eliminate(const UqfFormula& f);

// The quantifier-free equivalent =(t_f, 1).
Formula eliminate_to_formula(const UqfFormula& f);

}  // namespace vfl
