#include "vfl/signature.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace vfl;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
    return std::any_of(violations.begin(), violations.end(), [&](const std::string& v) {
        return v.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("empty signature validates") {
    Signature sig;
    CHECK(sig.validate().empty());
}

TEST_CASE("a name cannot be both function and predicate") {
    Signature sig;
    sig.fixed_fn("p", 2).predicate("p", 1);
    auto violations = sig.validate();
    REQUIRE(violations.size() == 1);
    CHECK(mentions(violations, "p is both function and predicate"));
}

TEST_CASE("merging signatures surfaces arity clashes") {
    Signature sig;
    sig.fixed_fn("f", 2);
    Signature other;
    other.fixed_fn("f", 3);
    for (const auto& d : other.decls()) sig.fixed_fn(d.name, d.arity);
    auto violations = sig.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0] == "f has arities 2 3");
}

TEST_CASE("numeral-shaped and reserved names are rejected") {
    Signature sig;
    sig.fixed_fn("12", 1).variadic_fn("forall").named_constant("no spaces");
    auto violations = sig.validate();
    CHECK(mentions(violations, "12 collides with the implicit numerals"));
    CHECK(mentions(violations, "forall is a reserved word"));
    CHECK(mentions(violations, "no spaces is not a lexable symbol name"));
}

TEST_CASE("duplicate identical declarations are harmless") {
    Signature sig;
    sig.variadic_fn("S").variadic_fn("S").fixed_fn("+", 2).fixed_fn("+", 2);
    CHECK(sig.ok());
}

TEST_CASE("validation is idempotent and order independent") {
    Signature a;
    a.fixed_fn("f", 2).predicate("f", 1).variadic_fn("G");
    Signature b;
    b.variadic_fn("G").predicate("f", 1).fixed_fn("f", 2);
    CHECK(a.validate() == b.validate());
    CHECK(a.validate() == a.validate());
}

TEST_CASE("standard signature shape") {
    Signature sig = std_signature();
    CHECK(sig.ok());
    CHECK(sig.is_variadic("G"));
    CHECK(sig.is_variadic("S"));
    CHECK(sig.fixed_arity("d") == std::size_t{2});
    CHECK(sig.fixed_arity("+") == std::size_t{2});
    CHECK(sig.fixed_arity("*") == std::size_t{2});
    CHECK(sig.fixed_arity("<=") == std::size_t{2});
    CHECK_FALSE(sig.predicate_arity("G").has_value());
}

TEST_CASE("variables are undeclared identifiers") {
    Signature sig = std_signature();
    CHECK(is_variable_name("x", sig));
    CHECK(is_variable_name("total_2", sig));
    CHECK_FALSE(is_variable_name("S", sig));
    CHECK_FALSE(is_variable_name("forall", sig));
    CHECK_FALSE(is_variable_name("12", sig));
    CHECK_FALSE(is_variable_name("+", sig));
}

TEST_CASE("signature file round trip") {
    Signature sig;
    sig.fixed_fn("plus", 2).variadic_fn("sum").nary_by_variadic_fn("tau", 2).predicate("even", 1);
    sig.named_constant("c0");
    std::istringstream in(sig.to_text());
    Signature back = Signature::from_stream(in);
    CHECK(back == sig);
}

TEST_CASE("signature file rejects malformed lines") {
    std::istringstream in("fn f\n");
    CHECK_THROWS_AS(Signature::from_stream(in), std::runtime_error);
    std::istringstream in2("mystery f 1\n");
    CHECK_THROWS_AS(Signature::from_stream(in2), std::runtime_error);
}
