#pragma once

#include "vfl/nat.hpp"
#include "vfl/signature.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace vfl {

struct TermNode;

// Immutable term AST. Copies share structure; structural equality.
class Term {
  public:
    static Term numeral(Nat value);
    static Term numeral(std::uint64_t value);
    static Term var(std::string name);
    static Term constant(std::string name);
    static Term app(std::string fn, std::vector<Term> args);
    static Term var_app(std::string fn, std::vector<Term> args);
    static Term ellipsis(std::string fn, Term body, std::string binder, Term bound);
    static Term nary_ellipsis(std::string fn, std::vector<Term> prefix, Term body,
                              std::string binder, Term bound);

    const TermNode& node() const { return *node_; }

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

  private:
    explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const TermNode> node_;
};

struct NumeralTerm {
    Nat value;
    friend bool operator==(const NumeralTerm&, const NumeralTerm&) = default;
};

struct VarTerm {
    std::string name;
    friend bool operator==(const VarTerm&, const VarTerm&) = default;
};

struct ConstTerm {
    std::string name;
    friend bool operator==(const ConstTerm&, const ConstTerm&) = default;
};

struct AppTerm {
    std::string fn;
    std::vector<Term> args;  // length equals the declared arity
    friend bool operator==(const AppTerm&, const AppTerm&) = default;
};

// Variadic symbol applied to explicitly written arguments.
struct VarAppTerm {
    std::string fn;
    std::vector<Term> args;  // nonempty
    friend bool operator==(const VarAppTerm&, const VarAppTerm&) = default;
};

// fn(body(0) ...binder body(bound)): binder is bound inside body only.
struct EllipsisTerm {
    std::string fn;
    Term body;
    std::string binder;
    Term bound;
    friend bool operator==(const EllipsisTerm&, const EllipsisTerm&) = default;
};

// fn(prefix_1,...,prefix_n; body(0) ...binder body(bound)).
struct NaryEllipsisTerm {
    std::string fn;
    std::vector<Term> prefix;  // length equals the declared prefix arity
    Term body;
    std::string binder;
    Term bound;
    friend bool operator==(const NaryEllipsisTerm&, const NaryEllipsisTerm&) = default;
};

struct TermNode {
    std::variant<NumeralTerm, VarTerm, ConstTerm, AppTerm, VarAppTerm, EllipsisTerm,
                 NaryEllipsisTerm>
        v;
    friend bool operator==(const TermNode&, const TermNode&) = default;
};

std::set<std::string> free_vars(const Term& t);

// Node count; numerals and variables count 1 regardless of magnitude. This
// is the termination measure for syntactic interpretation: substituting a
// numeral for a variable never changes it, and an ellipsis term is strictly
// larger than its body.
std::size_t complexity(const Term& t);

// Nullopt when every symbol in t is declared with matching arity and every
// variable/binder position holds an undeclared identifier.
std::optional<std::string> well_formedness_error(const Term& t, const Signature& sig);

}  // namespace vfl
