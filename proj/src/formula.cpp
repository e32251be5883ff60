#include "vfl/formula.hpp"

#include <utility>

namespace vfl {

Formula Formula::eq(Term lhs, Term rhs) {
    return Formula{
        std::make_shared<const FormulaNode>(FormulaNode{EqFormula{std::move(lhs), std::move(rhs)}})};
}

Formula Formula::pred(std::string name, std::vector<Term> args) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{PredFormula{std::move(name), std::move(args)}})};
}

Formula Formula::negate(Formula body) {
    return Formula{std::make_shared<const FormulaNode>(FormulaNode{NotFormula{std::move(body)}})};
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{AndFormula{std::move(lhs), std::move(rhs)}})};
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{OrFormula{std::move(lhs), std::move(rhs)}})};
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{ImpliesFormula{std::move(lhs), std::move(rhs)}})};
}

Formula Formula::iff(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{IffFormula{std::move(lhs), std::move(rhs)}})};
}

Formula Formula::forall(std::string var, Formula body) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{ForallFormula{std::move(var), std::move(body)}})};
}

Formula Formula::exists(std::string var, Formula body) {
    return Formula{std::make_shared<const FormulaNode>(
        FormulaNode{ExistsFormula{std::move(var), std::move(body)}})};
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    return *node_ == *other.node_;
}

namespace {

void collect(const Formula& f, std::set<std::string>& out) {
    const auto& n = f.node().v;
    if (const auto* eq = std::get_if<EqFormula>(&n)) {
        for (const auto& v : free_vars(eq->lhs)) out.insert(v);
        for (const auto& v : free_vars(eq->rhs)) out.insert(v);
        return;
    }
    if (const auto* p = std::get_if<PredFormula>(&n)) {
        for (const auto& arg : p->args)
            for (const auto& v : free_vars(arg)) out.insert(v);
        return;
    }
    if (const auto* nf = std::get_if<NotFormula>(&n)) return collect(nf->body, out);
    if (const auto* a = std::get_if<AndFormula>(&n)) {
        collect(a->lhs, out);
        collect(a->rhs, out);
        return;
    }
    if (const auto* o = std::get_if<OrFormula>(&n)) {
        collect(o->lhs, out);
        collect(o->rhs, out);
        return;
    }
    if (const auto* i = std::get_if<ImpliesFormula>(&n)) {
        collect(i->lhs, out);
        collect(i->rhs, out);
        return;
    }
    if (const auto* i = std::get_if<IffFormula>(&n)) {
        collect(i->lhs, out);
        collect(i->rhs, out);
        return;
    }
    if (const auto* q = std::get_if<ForallFormula>(&n)) {
        std::set<std::string> body;
        collect(q->body, body);
        body.erase(q->var);
        out.insert(body.begin(), body.end());
        return;
    }
    const auto& q = std::get<ExistsFormula>(n);
    std::set<std::string> body;
    collect(q.body, body);
    body.erase(q.var);
    out.insert(body.begin(), body.end());
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> out;
    collect(f, out);
    return out;
}

std::optional<std::string> well_formedness_error(const Formula& f, const Signature& sig) {
    const auto& n = f.node().v;
    if (const auto* eq = std::get_if<EqFormula>(&n)) {
        if (auto err = well_formedness_error(eq->lhs, sig)) return err;
        return well_formedness_error(eq->rhs, sig);
    }
    if (const auto* p = std::get_if<PredFormula>(&n)) {
        auto arity = sig.predicate_arity(p->pred);
        if (!arity) return "'" + p->pred + "' is not a declared predicate";
        if (*arity != p->args.size())
            return "'" + p->pred + "' expects " + std::to_string(*arity) + " arguments, got " +
                   std::to_string(p->args.size());
        for (const auto& arg : p->args)
            if (auto err = well_formedness_error(arg, sig)) return err;
        return std::nullopt;
    }
    if (const auto* nf = std::get_if<NotFormula>(&n)) return well_formedness_error(nf->body, sig);
    if (const auto* a = std::get_if<AndFormula>(&n)) {
        if (auto err = well_formedness_error(a->lhs, sig)) return err;
        return well_formedness_error(a->rhs, sig);
    }
    if (const auto* o = std::get_if<OrFormula>(&n)) {
        if (auto err = well_formedness_error(o->lhs, sig)) return err;
        return well_formedness_error(o->rhs, sig);
    }
    if (const auto* i = std::get_if<ImpliesFormula>(&n)) {
        if (auto err = well_formedness_error(i->lhs, sig)) return err;
        return well_formedness_error(i->rhs, sig);
    }
    if (const auto* i = std::get_if<IffFormula>(&n)) {
        if (auto err = well_formedness_error(i->lhs, sig)) return err;
        return well_formedness_error(i->rhs, sig);
    }
    if (const auto* q = std::get_if<ForallFormula>(&n)) {
        if (!is_variable_name(q->var, sig))
            return "'" + q->var + "' is not usable as a quantified variable";
        return well_formedness_error(q->body, sig);
    }
    const auto& q = std::get<ExistsFormula>(n);
    if (!is_variable_name(q.var, sig))
        return "'" + q.var + "' is not usable as a quantified variable";
    return well_formedness_error(q.body, sig);
}

bool is_quantifier_free(const Formula& f) {
    const auto& n = f.node().v;
    if (std::holds_alternative<EqFormula>(n) || std::holds_alternative<PredFormula>(n)) return true;
    if (const auto* nf = std::get_if<NotFormula>(&n)) return is_quantifier_free(nf->body);
    if (const auto* a = std::get_if<AndFormula>(&n))
        return is_quantifier_free(a->lhs) && is_quantifier_free(a->rhs);
    if (const auto* o = std::get_if<OrFormula>(&n))
        return is_quantifier_free(o->lhs) && is_quantifier_free(o->rhs);
    if (const auto* i = std::get_if<ImpliesFormula>(&n))
        return is_quantifier_free(i->lhs) && is_quantifier_free(i->rhs);
    if (const auto* i = std::get_if<IffFormula>(&n))
        return is_quantifier_free(i->lhs) && is_quantifier_free(i->rhs);
    return false;
}

}  // namespace vfl
