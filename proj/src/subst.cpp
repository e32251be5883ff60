#include "vfl/subst.hpp"

#include <algorithm>

namespace vfl {

Term substitute(const Term& r, const std::string& x, const Term& t) {
    const auto& n = r.node().v;
    if (std::holds_alternative<NumeralTerm>(n) || std::holds_alternative<ConstTerm>(n)) return r;
    if (const auto* v = std::get_if<VarTerm>(&n)) return v->name == x ? t : r;
    if (const auto* a = std::get_if<AppTerm>(&n)) {
        std::vector<Term> args;
        args.reserve(a->args.size());
        for (const auto& arg : a->args) args.push_back(substitute(arg, x, t));
        return Term::app(a->fn, std::move(args));
    }
    if (const auto* a = std::get_if<VarAppTerm>(&n)) {
        std::vector<Term> args;
        args.reserve(a->args.size());
        for (const auto& arg : a->args) args.push_back(substitute(arg, x, t));
        return Term::var_app(a->fn, std::move(args));
    }
    if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
        Term bound = substitute(e->bound, x, t);
        if (e->binder == x)
            return Term::ellipsis(e->fn, e->body, e->binder, std::move(bound));
        return Term::ellipsis(e->fn, substitute(e->body, x, t), e->binder, std::move(bound));
    }
    const auto& e = std::get<NaryEllipsisTerm>(n);
    std::vector<Term> prefix;
    prefix.reserve(e.prefix.size());
    for (const auto& p : e.prefix) prefix.push_back(substitute(p, x, t));
    Term bound = substitute(e.bound, x, t);
    if (e.binder == x)
        return Term::nary_ellipsis(e.fn, std::move(prefix), e.body, e.binder, std::move(bound));
    return Term::nary_ellipsis(e.fn, std::move(prefix), substitute(e.body, x, t), e.binder,
                               std::move(bound));
}

bool substitutable(const Term& t, const std::string& x, const Term& r) {
    const auto& n = r.node().v;
    if (std::holds_alternative<NumeralTerm>(n) || std::holds_alternative<ConstTerm>(n) ||
        std::holds_alternative<VarTerm>(n))
        return true;
    if (const auto* a = std::get_if<AppTerm>(&n))
        return std::all_of(a->args.begin(), a->args.end(),
                           [&](const Term& u) { return substitutable(t, x, u); });
    if (const auto* a = std::get_if<VarAppTerm>(&n))
        return std::all_of(a->args.begin(), a->args.end(),
                           [&](const Term& u) { return substitutable(t, x, u); });
    if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
        if (!free_vars(r).count(x)) return true;
        if (e->binder == x && substitutable(t, x, e->bound)) return true;
        return !free_vars(t).count(e->binder) && substitutable(t, x, e->body) &&
               substitutable(t, x, e->bound);
    }
    const auto& e = std::get<NaryEllipsisTerm>(n);
    bool prefix_ok = std::all_of(e.prefix.begin(), e.prefix.end(),
                                 [&](const Term& u) { return substitutable(t, x, u); });
    if (!free_vars(r).count(x)) return true;
    if (prefix_ok && e.binder == x && substitutable(t, x, e.bound)) return true;
    return prefix_ok && !free_vars(t).count(e.binder) && substitutable(t, x, e.body) &&
           substitutable(t, x, e.bound);
}

Formula substitute_formula(const Formula& f, const std::string& x, const Term& t) {
    const auto& n = f.node().v;
    if (const auto* eq = std::get_if<EqFormula>(&n))
        return Formula::eq(substitute(eq->lhs, x, t), substitute(eq->rhs, x, t));
    if (const auto* p = std::get_if<PredFormula>(&n)) {
        std::vector<Term> args;
        args.reserve(p->args.size());
        for (const auto& arg : p->args) args.push_back(substitute(arg, x, t));
        return Formula::pred(p->pred, std::move(args));
    }
    if (const auto* nf = std::get_if<NotFormula>(&n))
        return Formula::negate(substitute_formula(nf->body, x, t));
    if (const auto* a = std::get_if<AndFormula>(&n))
        return Formula::conj(substitute_formula(a->lhs, x, t), substitute_formula(a->rhs, x, t));
    if (const auto* o = std::get_if<OrFormula>(&n))
        return Formula::disj(substitute_formula(o->lhs, x, t), substitute_formula(o->rhs, x, t));
    if (const auto* i = std::get_if<ImpliesFormula>(&n))
        return Formula::implies(substitute_formula(i->lhs, x, t),
                                substitute_formula(i->rhs, x, t));
    if (const auto* i = std::get_if<IffFormula>(&n))
        return Formula::iff(substitute_formula(i->lhs, x, t), substitute_formula(i->rhs, x, t));
    if (const auto* q = std::get_if<ForallFormula>(&n)) {
        if (q->var == x) return f;
        return Formula::forall(q->var, substitute_formula(q->body, x, t));
    }
    const auto& q = std::get<ExistsFormula>(n);
    if (q.var == x) return f;
    return Formula::exists(q.var, substitute_formula(q.body, x, t));
}

bool substitutable_formula(const Term& t, const std::string& x, const Formula& f) {
    const auto& n = f.node().v;
    if (const auto* eq = std::get_if<EqFormula>(&n))
        return substitutable(t, x, eq->lhs) && substitutable(t, x, eq->rhs);
    if (const auto* p = std::get_if<PredFormula>(&n))
        return std::all_of(p->args.begin(), p->args.end(),
                           [&](const Term& u) { return substitutable(t, x, u); });
    if (const auto* nf = std::get_if<NotFormula>(&n)) return substitutable_formula(t, x, nf->body);
    if (const auto* a = std::get_if<AndFormula>(&n))
        return substitutable_formula(t, x, a->lhs) && substitutable_formula(t, x, a->rhs);
    if (const auto* o = std::get_if<OrFormula>(&n))
        return substitutable_formula(t, x, o->lhs) && substitutable_formula(t, x, o->rhs);
    if (const auto* i = std::get_if<ImpliesFormula>(&n))
        return substitutable_formula(t, x, i->lhs) && substitutable_formula(t, x, i->rhs);
    if (const auto* i = std::get_if<IffFormula>(&n))
        return substitutable_formula(t, x, i->lhs) && substitutable_formula(t, x, i->rhs);
    const std::string* var = nullptr;
    const Formula* body = nullptr;
    if (const auto* fa = std::get_if<ForallFormula>(&n)) {
        var = &fa->var;
        body = &fa->body;
    } else {
        const auto& ex = std::get<ExistsFormula>(n);
        var = &ex.var;
        body = &ex.body;
    }
    if (!free_vars(f).count(x)) return true;
    return !free_vars(t).count(*var) && substitutable_formula(t, x, *body);
}

}  // namespace vfl
