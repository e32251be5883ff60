#include "vfl/generator.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"
#include "vfl/qelim.hpp"

#include <doctest.h>

using namespace vfl;

TEST_CASE("generation is deterministic per seed") {
    GeneratorConfig cfg;
    cfg.seed = 99;
    Signature sig = std_signature();
    CHECK(gen_term(cfg, sig) == gen_term(cfg, sig));
    TermGenerator a(cfg, sig);
    TermGenerator b(cfg, sig);
    for (int i = 0; i < 200; ++i) {
        CHECK(a.term() == b.term());
        CHECK(a.formula() == b.formula());
    }
    GeneratorConfig other = cfg;
    other.seed = 100;
    CHECK_FALSE(gen_term(other, sig) == gen_term(cfg, sig));
}

TEST_CASE("generated terms stay within the depth-derived size bound") {
    GeneratorConfig cfg;
    cfg.seed = 4;
    cfg.max_depth = 4;
    TermGenerator gen(cfg, std_signature());
    for (int i = 0; i < 10000; ++i) CHECK(complexity(gen.term()) <= 32);
}

TEST_CASE("generated terms are well formed and round trip") {
    GeneratorConfig cfg;
    cfg.seed = 6;
    Signature sig = std_signature();
    TermGenerator gen(cfg, sig);
    for (int i = 0; i < 1500; ++i) {
        Term t = gen.term();
        CHECK_FALSE(well_formedness_error(t, sig).has_value());
        CHECK(parse_term(print_term(t), sig) == t);
    }
    for (int i = 0; i < 300; ++i) {
        Formula f = gen.formula();
        CHECK_FALSE(well_formedness_error(f, sig).has_value());
    }
}

TEST_CASE("the bounded-fragment generator only produces certifiable formulas") {
    GeneratorConfig cfg;
    cfg.seed = 8;
    cfg.variable_pool = {"x", "y", "z"};
    Signature sig = std_signature();
    TermGenerator gen(cfg, sig);
    for (int i = 0; i < 500; ++i) {
        Formula f = gen.uqf_formula();
        CHECK(std::holds_alternative<UqfFormula>(classify(f, sig)));
    }
}

TEST_CASE("generation works over signatures with n-ary-by-variadic symbols") {
    Signature sig;
    sig.fixed_fn("f", 1).fixed_fn("l", 1).nary_by_variadic_fn("tau", 1);
    REQUIRE(sig.ok());
    GeneratorConfig cfg;
    cfg.seed = 12;
    TermGenerator gen(cfg, sig);
    bool saw_nary = false;
    for (int i = 0; i < 300; ++i) {
        Term t = gen.term();
        CHECK_FALSE(well_formedness_error(t, sig).has_value());
        CHECK(parse_term(print_term(t), sig) == t);
        if (std::holds_alternative<NaryEllipsisTerm>(t.node().v)) saw_nary = true;
    }
    CHECK(saw_nary);
}

TEST_CASE("config validation") {
    GeneratorConfig cfg;
    cfg.variable_pool = {};
    CHECK_THROWS_AS(TermGenerator(cfg, std_signature()), std::invalid_argument);
    GeneratorConfig declared;
    declared.variable_pool = {"S"};
    CHECK_THROWS_AS(TermGenerator(declared, std_signature()), std::invalid_argument);
}
