#include "vfl/generator.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"
#include "vfl/qelim.hpp"
#include "vfl/semantics.hpp"

#include <doctest.h>

using namespace vfl;

namespace {

const Signature sig = std_signature();
const Term x = Term::var("x");
const Term y = Term::var("y");

Term num(std::uint64_t n) { return Term::numeral(n); }

UqfFormula certify(const Formula& f) {
    auto result = classify(f, sig);
    REQUIRE(std::holds_alternative<UqfFormula>(result));
    return std::get<UqfFormula>(result);
}

std::string rejection(const Formula& f) {
    auto result = classify(f, sig);
    REQUIRE(std::holds_alternative<NotUqf>(result));
    return std::get<NotUqf>(result).reason;
}

}  // namespace

TEST_CASE("atoms and connectives classify") {
    CHECK(std::holds_alternative<UqfFormula>(classify(Formula::eq(x, y), sig)));
    Formula f = parse_formula("exists x. (x <= y & =( +(x,x), y))", sig);
    CHECK(std::holds_alternative<UqfFormula>(classify(f, sig)));
    Formula g = parse_formula("forall x. x <= y -> =(x,x) | ~=(y,0)", sig);
    CHECK(std::holds_alternative<UqfFormula>(classify(g, sig)));
}

TEST_CASE("classification pinpoints rejections") {
    CHECK(rejection(parse_formula("exists x. (x <= x & =(x,x))", sig)) ==
          "the guard variables must be distinct");
    CHECK(rejection(parse_formula("exists x. =(x,y)", sig)) ==
          "an existential must have the guarded shape exists x (x <= y & ...)");
    CHECK(rejection(parse_formula("forall x. =(x,y)", sig)) ==
          "a universal must have the guarded shape forall x (x <= y -> ...)");
    CHECK(rejection(parse_formula("exists x. (x <= 3 & =(x,x))", sig)) ==
          "the guard bound must be a variable");
    Signature psig = std_signature();
    psig.predicate("even", 1);
    auto result = classify(Formula::pred("even", {x}), psig);
    REQUIRE(std::holds_alternative<NotUqf>(result));
    CHECK(std::get<NotUqf>(result).reason == "predicate atoms are not allowed");
    // an offending subformula is reported, not just the reason
    Formula nested = Formula::conj(Formula::eq(x, x), parse_formula("exists x. =(x,y)", sig));
    auto deep = classify(nested, sig);
    REQUIRE(std::holds_alternative<NotUqf>(deep));
    CHECK(print_formula(std::get<NotUqf>(deep).offending) == "exists x. =(x,y)");
}

TEST_CASE("characteristic terms follow the recursive construction") {
    CHECK(eliminate(certify(Formula::eq(x, y))) == Term::app("d", {x, y}));

    Formula guarded = parse_formula("exists x. (x <= y & =( +(x,x), y))", sig);
    Term inner = Term::app("d", {Term::app("+", {x, x}), y});
    CHECK(eliminate(certify(guarded)) == Term::ellipsis("G", inner, "x", y));

    CHECK(eliminate(certify(Formula::negate(Formula::eq(x, y)))) ==
          Term::app("d", {Term::app("d", {x, y}), num(0)}));

    Formula conj = Formula::conj(Formula::eq(x, y), Formula::eq(x, x));
    CHECK(eliminate(certify(conj)) ==
          Term::app("d", {Term::app("+", {Term::app("d", {x, y}), Term::app("d", {x, x})}),
                          num(2)}));

    // a | b reduces to ~(~a & ~b) before the proved clauses apply
    Formula disj = Formula::disj(Formula::eq(x, y), Formula::eq(x, x));
    Term ta = Term::app("d", {x, y});
    Term tb = Term::app("d", {x, x});
    auto t_not = [](Term t) { return Term::app("d", {std::move(t), Term::numeral(std::uint64_t{0})}); };
    auto t_and = [](Term a, Term b) {
        return Term::app("d", {Term::app("+", {std::move(a), std::move(b)}),
                               Term::numeral(std::uint64_t{2})});
    };
    CHECK(eliminate(certify(disj)) == t_not(t_and(t_not(ta), t_not(tb))));

    // forall x (x <= y -> a) reduces to ~exists x (x <= y & ~a)
    Formula all = parse_formula("forall x. x <= y -> =(x,x)", sig);
    CHECK(eliminate(certify(all)) ==
          t_not(Term::ellipsis("G", t_not(tb), "x", y)));
}

TEST_CASE("the quantifier-free equivalent evaluates like the original") {
    Model m = std_model();
    Formula f = parse_formula("exists x. (x <= y & =( +(x,x), y))", sig);
    Formula qf = eliminate_to_formula(certify(f));
    CHECK(is_quantifier_free(qf));
    CHECK(free_vars(qf) == free_vars(f));
    Assignment s4(std::map<std::string, Nat>{{"y", Nat(4)}});
    Assignment s3(std::map<std::string, Nat>{{"y", Nat(3)}});
    CHECK(satisfies(qf, m, s4) == Truth::True);
    CHECK(satisfies(qf, m, s3) == Truth::False);
}

TEST_CASE("free variables are preserved exactly") {
    GeneratorConfig cfg;
    cfg.seed = 53;
    cfg.variable_pool = {"x", "y", "z"};
    cfg.max_depth = 3;
    TermGenerator gen(cfg, sig);
    for (int i = 0; i < 400; ++i) {
        Formula f = gen.uqf_formula();
        UqfFormula uqf = certify(f);
        CHECK(free_vars(eliminate(uqf)) == free_vars(f));
        CHECK(free_vars(eliminate_to_formula(uqf)) == free_vars(f));
        CHECK(is_quantifier_free(eliminate_to_formula(uqf)));
    }
}

TEST_CASE("membership in the evens via a bounded doubling formula") {
    Model m = std_model();
    Formula even = parse_formula("exists k. (k <= x & =( +(k,k), x))", sig);
    Term t_even = eliminate(certify(even));
    CHECK(free_vars(t_even) == std::set<std::string>{"x"});
    for (std::uint64_t n = 0; n <= 40; ++n) {
        Assignment s(std::map<std::string, Nat>{{"x", Nat(n)}});
        Nat value = interp_syntactic(t_even, m, s);
        CHECK(value == (n % 2 == 0 ? 1 : 0));
        CHECK(satisfies(even, m, s) == (n % 2 == 0 ? Truth::True : Truth::False));
    }
}

TEST_CASE("characteristic terms stay 0/1-valued and track satisfaction") {
    GeneratorConfig cfg;
    cfg.seed = 59;
    cfg.variable_pool = {"x", "y"};
    cfg.max_depth = 3;
    cfg.max_numeral = 4;
    cfg.ellipsis_probability = 0.15;
    TermGenerator gen(cfg, sig);
    Model m = std_model();
    for (int i = 0; i < 150; ++i) {
        Formula f = gen.uqf_formula();
        Term t_f = eliminate(certify(f));
        for (std::uint64_t a = 0; a <= 4; ++a) {
            for (std::uint64_t b = 0; b <= 4; ++b) {
                Assignment s(std::map<std::string, Nat>{{"x", Nat(a)}, {"y", Nat(b)}});
                Nat value = interp_syntactic(t_f, m, s);
                bool is01 = value == 0 || value == 1;
                CHECK(is01);
                Truth sat = satisfies(f, m, s);
                REQUIRE(sat != Truth::Unknown);
                CHECK((sat == Truth::True) == (value == 1));
                CHECK((satisfies(Formula::negate(f), m, s) == Truth::True) == (value == 0));
            }
        }
    }
}

TEST_CASE("elimination requires the standard symbols") {
    Signature small;
    small.fixed_fn("<=", 2);
    REQUIRE(small.ok());
    Formula f = Formula::eq(x, y);
    auto result = classify(f, small);
    REQUIRE(std::holds_alternative<UqfFormula>(result));
    CHECK_THROWS_AS(eliminate(std::get<UqfFormula>(result)), std::invalid_argument);
    Signature no_leq;
    no_leq.fixed_fn("+", 2);
    CHECK_THROWS_AS(classify(f, no_leq), std::invalid_argument);
}
