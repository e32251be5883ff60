#pragma once

#include "vfl/term.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace vfl {

struct FormulaNode;

// Immutable formula AST over variadic terms.
class Formula {
  public:
    static Formula eq(Term lhs, Term rhs);
    static Formula pred(std::string name, std::vector<Term> args);
    static Formula negate(Formula body);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula iff(Formula lhs, Formula rhs);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);

    const FormulaNode& node() const { return *node_; }

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

  private:
    explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const FormulaNode> node_;
};

struct EqFormula {
    Term lhs, rhs;
    friend bool operator==(const EqFormula&, const EqFormula&) = default;
};

struct PredFormula {
    std::string pred;
    std::vector<Term> args;
    friend bool operator==(const PredFormula&, const PredFormula&) = default;
};

struct NotFormula {
    Formula body;
    friend bool operator==(const NotFormula&, const NotFormula&) = default;
};

struct AndFormula {
    Formula lhs, rhs;
    friend bool operator==(const AndFormula&, const AndFormula&) = default;
};

struct OrFormula {
    Formula lhs, rhs;
    friend bool operator==(const OrFormula&, const OrFormula&) = default;
};

struct ImpliesFormula {
    Formula lhs, rhs;
    friend bool operator==(const ImpliesFormula&, const ImpliesFormula&) = default;
};

struct IffFormula {
    Formula lhs, rhs;
    friend bool operator==(const IffFormula&, const IffFormula&) = default;
};

struct ForallFormula {
    std::string var;
    Formula body;
    friend bool operator==(const ForallFormula&, const ForallFormula&) = default;
};

struct ExistsFormula {
    std::string var;
    Formula body;
    friend bool operator==(const ExistsFormula&, const ExistsFormula&) = default;
};

struct FormulaNode {
    std::variant<EqFormula, PredFormula, NotFormula, AndFormula, OrFormula, ImpliesFormula,
                 IffFormula, ForallFormula, ExistsFormula>
        v;
    friend bool operator==(const FormulaNode&, const FormulaNode&) = default;
};

std::set<std::string> free_vars(const Formula& f);

std::optional<std::string> well_formedness_error(const Formula& f, const Signature& sig);

bool is_quantifier_free(const Formula& f);

}  // namespace vfl
