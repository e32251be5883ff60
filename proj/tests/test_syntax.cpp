#include "vfl/formula.hpp"
#include "vfl/generator.hpp"
#include "vfl/subst.hpp"
#include "vfl/term.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vfl;

namespace {

const Term x = Term::var("x");
const Term y = Term::var("y");
const Term z = Term::var("z");

Term times(Term a, Term b) { return Term::app("*", {std::move(a), std::move(b)}); }

}  // namespace

TEST_CASE("free variables of terms") {
    CHECK(free_vars(x) == std::set<std::string>{"x"});
    CHECK(free_vars(Term::numeral(std::uint64_t{7})).empty());
    // binder removed from the body, bound kept
    Term t = Term::ellipsis("S", times(x, y), "x", z);
    CHECK(free_vars(t) == std::set<std::string>{"y", "z"});
    // the bound occurrence of the binder variable stays free
    Term u = Term::ellipsis("S", x, "x", x);
    CHECK(free_vars(u) == std::set<std::string>{"x"});
}

TEST_CASE("free variables of n-ary-by-variadic terms") {
    Term t = Term::nary_ellipsis("tau", {Term::var("a"), y}, times(x, y), "x", z);
    CHECK(free_vars(t) == std::set<std::string>{"a", "y", "z"});
}

TEST_CASE("free variables of formulas") {
    CHECK(free_vars(Formula::eq(x, y)) == std::set<std::string>{"x", "y"});
    CHECK(free_vars(Formula::exists("x", Formula::eq(x, y))) == std::set<std::string>{"y"});
    // In forall x. S(x(0) ...x x(x)) = z, the term's only free variable is
    // the bound occurrence of x, which the quantifier then captures.
    Formula f = Formula::forall("x", Formula::eq(Term::ellipsis("S", x, "x", x), z));
    CHECK(free_vars(f) == std::set<std::string>{"z"});
}

TEST_CASE("complexity counts nodes with atomic numerals") {
    CHECK(complexity(Term::numeral(std::uint64_t{100})) == 1);
    CHECK(complexity(Term::app("+", {x, Term::numeral(std::uint64_t{1})})) == 3);
    CHECK(complexity(Term::ellipsis("S", x, "x", Term::numeral(std::uint64_t{5}))) == 3);
}

TEST_CASE("substituting a numeral preserves complexity and ellipses grow strictly") {
    GeneratorConfig cfg;
    cfg.seed = 7;
    TermGenerator gen(cfg, std_signature());
    for (int i = 0; i < 500; ++i) {
        Term u = gen.term();
        std::string var = gen.variable();
        Term c = Term::numeral(gen.numeral_value());
        CHECK(complexity(substitute(u, var, c)) == complexity(u));
        Term wrapped = Term::ellipsis("S", u, var, gen.term());
        CHECK(complexity(u) < complexity(wrapped));
    }
}

TEST_CASE("free variables after substitution") {
    GeneratorConfig cfg;
    cfg.seed = 11;
    TermGenerator gen(cfg, std_signature());
    int exact = 0;
    for (int i = 0; i < 800; ++i) {
        Term r = gen.term();
        Term t = gen.term();
        std::string var = gen.variable();
        auto fr = free_vars(r);
        auto result = free_vars(substitute(r, var, t));
        std::set<std::string> upper = fr;
        upper.erase(var);
        for (const auto& v : free_vars(t)) upper.insert(v);
        CHECK(std::includes(upper.begin(), upper.end(), result.begin(), result.end()));
        // with the variable free and no capture, the bound is attained
        if (fr.count(var) && substitutable(t, var, r)) {
            ++exact;
            CHECK(result == upper);
        }
    }
    CHECK(exact > 100);
}

TEST_CASE("a variable absent from both pieces stays absent after substitution") {
    GeneratorConfig cfg;
    cfg.seed = 13;
    TermGenerator gen(cfg, std_signature());
    for (int i = 0; i < 500; ++i) {
        Term u = gen.term();
        Term t = gen.term();
        std::string probe = gen.variable();
        std::string target = gen.variable();
        if (free_vars(u).count(probe) || free_vars(t).count(probe)) continue;
        CHECK_FALSE(free_vars(substitute(u, target, t)).count(probe));
    }
}

TEST_CASE("well-formedness checks") {
    Signature sig = std_signature();
    CHECK_FALSE(well_formedness_error(Term::ellipsis("S", x, "x", y), sig));
    CHECK(well_formedness_error(Term::app("+", {x}), sig).has_value());
    CHECK(well_formedness_error(Term::app("nope", {x, y}), sig).has_value());
    CHECK(well_formedness_error(Term::var("S"), sig).has_value());
    CHECK(well_formedness_error(Term::ellipsis("S", x, "S", y), sig).has_value());
    CHECK(well_formedness_error(Term::var_app("S", {}), sig).has_value());

    Signature nsig;
    nsig.nary_by_variadic_fn("tau", 2);
    CHECK_FALSE(
        well_formedness_error(Term::nary_ellipsis("tau", {x, y}, x, "z", y), nsig).has_value());
    CHECK(well_formedness_error(Term::nary_ellipsis("tau", {x}, x, "z", y), nsig).has_value());

    CHECK(well_formedness_error(Formula::pred("even", {x}), sig).has_value());
    CHECK_FALSE(well_formedness_error(Formula::forall("v", Formula::eq(x, y)), sig).has_value());
    CHECK(well_formedness_error(Formula::forall("S", Formula::eq(x, y)), sig).has_value());
}

TEST_CASE("structural equality is deep") {
    Term a = Term::ellipsis("S", times(x, y), "x", Term::numeral(std::uint64_t{5}));
    Term b = Term::ellipsis("S", times(x, y), "x", Term::numeral(std::uint64_t{5}));
    CHECK(a == b);
    Term c = Term::ellipsis("S", times(x, y), "y", Term::numeral(std::uint64_t{5}));
    CHECK(a != c);
}
