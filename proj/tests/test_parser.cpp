#include "vfl/generator.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"

#include <doctest.h>

using namespace vfl;

namespace {

const Signature sig = std_signature();
const Term x = Term::var("x");
const Term y = Term::var("y");

ParseError::Code term_error(const std::string& src) {
    try {
        parse_term(src, sig);
    } catch (const ParseError& e) {
        CHECK(e.span().begin <= e.span().end);
        CHECK(e.span().end <= src.size());
        return e.code();
    }
    FAIL("expected a parse error for: ", src);
    return ParseError::Code::UnexpectedToken;
}

ParseError::Code formula_error(const std::string& src) {
    try {
        parse_formula(src, sig);
    } catch (const ParseError& e) {
        return e.code();
    }
    FAIL("expected a parse error for: ", src);
    return ParseError::Code::UnexpectedToken;
}

}  // namespace

TEST_CASE("ellipsis terms parse with the body written twice") {
    Term t = parse_term("S(x(0) ...x x(y))", sig);
    CHECK(t == Term::ellipsis("S", x, "x", y));
}

TEST_CASE("prefix applications parse") {
    Term t = parse_term("d(+(x,x), y)", sig);
    CHECK(t == Term::app("d", {Term::app("+", {x, x}), y}));
}

TEST_CASE("mismatched body copies are rejected") {
    CHECK(term_error("S(x(0) ...x y(z))") == ParseError::Code::BodyCopiesDiffer);
}

TEST_CASE("range sugar is accepted and maps to the two-copy form") {
    CHECK(parse_term("S{x=0..5}(x)", sig) == parse_term("S(x(0) ...x x(5))", sig));
    CHECK(parse_term("S{x=0..y}(+(x,1))", sig) ==
          Term::ellipsis("S", Term::app("+", {x, Term::numeral(std::uint64_t{1})}), "x", y));
    // the lower bound is pinned at 0
    CHECK(term_error("S{x=1..5}(x)") == ParseError::Code::MalformedEllipsis);
}

TEST_CASE("variadic symbols accept explicit arguments") {
    CHECK(parse_term("G(x)", sig) == Term::var_app("G", {x}));
    CHECK(parse_term("S(x, y, 3)", sig) ==
          Term::var_app("S", {x, y, Term::numeral(std::uint64_t{3})}));
}

TEST_CASE("a compound ellipsis body round trips through both copies") {
    Term body = Term::app("*", {x, x});
    Term t = parse_term("S(*(x,x)(0) ...x *(x,x)(10))", sig);
    CHECK(t == Term::ellipsis("S", body, "x", Term::numeral(std::uint64_t{10})));
}

TEST_CASE("term parse errors carry classified codes") {
    CHECK(term_error("d(x)") == ParseError::Code::ArityMismatch);
    CHECK(term_error("h(x)") == ParseError::Code::UnknownSymbol);
    CHECK(term_error("S(x ...x x(y))") == ParseError::Code::MalformedEllipsis);
    CHECK(term_error("S(x(0) ...5 x(y))") == ParseError::Code::MalformedEllipsis);
    CHECK(term_error("S(x(1) ...x x(y))") == ParseError::Code::MalformedEllipsis);
    CHECK(term_error("S(x(0) ...S x(y))") == ParseError::Code::MalformedEllipsis);
    CHECK(term_error("forall") == ParseError::Code::UnknownSymbol);
    CHECK(term_error("d(x,") == ParseError::Code::UnexpectedEnd);
    CHECK(term_error("") == ParseError::Code::UnexpectedEnd);
    CHECK(term_error("x)") == ParseError::Code::UnexpectedToken);
}

TEST_CASE("formulas parse with the documented precedence") {
    Formula f = parse_formula("exists x. (x <= y & =( +(x,x), y))", sig);
    Formula guard = Formula::eq(Term::app("<=", {x, y}), Term::numeral(std::uint64_t{1}));
    Formula body = Formula::eq(Term::app("+", {x, x}), y);
    CHECK(f == Formula::exists("x", Formula::conj(guard, body)));

    CHECK(parse_formula("~ =(x,y)", sig) == Formula::negate(Formula::eq(x, y)));

    Formula g = parse_formula("forall x. x <= y -> =(x,x)", sig);
    CHECK(g == Formula::forall("x", Formula::implies(guard, Formula::eq(x, x))));
}

TEST_CASE("connective precedence and associativity") {
    Formula a = Formula::eq(x, x);
    Formula b = Formula::eq(y, y);
    Formula c = Formula::eq(x, y);
    CHECK(parse_formula("=(x,x) & =(y,y) | =(x,y)", sig) ==
          Formula::disj(Formula::conj(a, b), c));
    CHECK(parse_formula("~=(x,x) & =(y,y)", sig) == Formula::conj(Formula::negate(a), b));
    CHECK(parse_formula("=(x,x) -> =(y,y) -> =(x,y)", sig) ==
          Formula::implies(a, Formula::implies(b, c)));
    CHECK(parse_formula("=(x,x) & =(y,y) <-> =(x,y)", sig) ==
          Formula::iff(Formula::conj(a, b), c));
    CHECK(parse_formula("=(x,x) & (=(y,y) | =(x,y))", sig) ==
          Formula::conj(a, Formula::disj(b, c)));
    // infix equality is input sugar
    CHECK(parse_formula("x = y", sig) == c);
}

TEST_CASE("quantifier bodies extend maximally") {
    Formula a = Formula::eq(x, x);
    Formula b = Formula::eq(y, y);
    Formula f = parse_formula("exists x. =(x,x) & =(y,y)", sig);
    CHECK(f == Formula::exists("x", Formula::conj(a, b)));
    Formula g = parse_formula("=(x,x) & forall y. =(y,y)", sig);
    CHECK(g == Formula::conj(a, Formula::forall("y", b)));
}

TEST_CASE("formula parse errors") {
    CHECK(formula_error("forall 3. =(x,x)") == ParseError::Code::BadQuantifier);
    CHECK(formula_error("forall S. =(x,x)") == ParseError::Code::BadQuantifier);
    CHECK(formula_error("forall x =(x,x)") == ParseError::Code::BadQuantifier);
    CHECK(formula_error("exists x. p(x)") == ParseError::Code::UnknownSymbol);
    CHECK(formula_error("x + y") == ParseError::Code::UnexpectedToken);
    CHECK(formula_error("(=(x,y)") == ParseError::Code::UnexpectedEnd);
}

TEST_CASE("printing is canonical") {
    CHECK(print_term(Term::ellipsis("S", x, "x", Term::numeral(std::uint64_t{5}))) ==
          "S(x(0) ...x x(5))");
    CHECK(print_term(Term::numeral(std::uint64_t{100})) == "100");
    CHECK(print_term(parse_term("S{x=0..5}(x)", sig)) == "S(x(0) ...x x(5))");
    CHECK(print_formula(parse_formula("x <= y", sig)) == "=(<=(x,y),1)");
    CHECK(print_formula(Formula::forall("x", Formula::eq(x, x))) == "forall x. =(x,x)");
}

TEST_CASE("parsing a printed term gives the same tree back") {
    GeneratorConfig cfg;
    cfg.seed = 2024;
    TermGenerator gen(cfg, sig);
    for (int i = 0; i < 2000; ++i) {
        Term t = gen.term();
        CHECK(parse_term(print_term(t), sig) == t);
    }
    for (int i = 0; i < 500; ++i) {
        Formula f = gen.formula();
        CHECK(parse_formula(print_formula(f), sig) == f);
    }
}

TEST_CASE("n-ary-by-variadic concrete form") {
    Signature nsig;
    nsig.fixed_fn("f", 1).fixed_fn("l", 2).nary_by_variadic_fn("tau", 2);
    REQUIRE(nsig.ok());
    Term t = parse_term("tau(x, y; f(z)(0) ...z f(z)(l(x,y)))", nsig);
    Term fz = Term::app("f", {Term::var("z")});
    CHECK(t == Term::nary_ellipsis("tau", {x, y}, fz, "z", Term::app("l", {x, y})));
    CHECK(parse_term(print_term(t), nsig) == t);

    Signature zsig;
    zsig.nary_by_variadic_fn("tau", 0);
    Term u = parse_term("tau(; x(0) ...x x(3))", zsig);
    CHECK(u == Term::nary_ellipsis("tau", {}, x, "x", Term::numeral(std::uint64_t{3})));
    CHECK(parse_term(print_term(u), zsig) == u);
}

TEST_CASE("parsing requires a validated signature") {
    Signature bad;
    bad.fixed_fn("f", 1).predicate("f", 2);
    CHECK_THROWS_AS(parse_term("f(x)", bad), std::invalid_argument);
}
