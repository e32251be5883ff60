#include "vfl/term.hpp"

#include <utility>

namespace vfl {

Term Term::numeral(Nat value) {
    return Term{std::make_shared<const TermNode>(TermNode{NumeralTerm{std::move(value)}})};
}

Term Term::numeral(std::uint64_t value) { return numeral(Nat(value)); }

Term Term::var(std::string name) {
    return Term{std::make_shared<const TermNode>(TermNode{VarTerm{std::move(name)}})};
}

Term Term::constant(std::string name) {
    return Term{std::make_shared<const TermNode>(TermNode{ConstTerm{std::move(name)}})};
}

Term Term::app(std::string fn, std::vector<Term> args) {
    return Term{
        std::make_shared<const TermNode>(TermNode{AppTerm{std::move(fn), std::move(args)}})};
}

Term Term::var_app(std::string fn, std::vector<Term> args) {
    return Term{
        std::make_shared<const TermNode>(TermNode{VarAppTerm{std::move(fn), std::move(args)}})};
}

Term Term::ellipsis(std::string fn, Term body, std::string binder, Term bound) {
    return Term{std::make_shared<const TermNode>(
        TermNode{EllipsisTerm{std::move(fn), std::move(body), std::move(binder), std::move(bound)}})};
}

Term Term::nary_ellipsis(std::string fn, std::vector<Term> prefix, Term body, std::string binder,
                         Term bound) {
    return Term{std::make_shared<const TermNode>(TermNode{NaryEllipsisTerm{
        std::move(fn), std::move(prefix), std::move(body), std::move(binder), std::move(bound)}})};
}

bool Term::operator==(const Term& other) const {
    if (node_ == other.node_) return true;
    return *node_ == *other.node_;
}

namespace {

void collect_free_vars(const Term& t, std::set<std::string>& out) {
    const auto& n = t.node().v;
    if (std::holds_alternative<NumeralTerm>(n) || std::holds_alternative<ConstTerm>(n)) return;
    if (const auto* v = std::get_if<VarTerm>(&n)) {
        out.insert(v->name);
        return;
    }
    if (const auto* a = std::get_if<AppTerm>(&n)) {
        for (const auto& arg : a->args) collect_free_vars(arg, out);
        return;
    }
    if (const auto* a = std::get_if<VarAppTerm>(&n)) {
        for (const auto& arg : a->args) collect_free_vars(arg, out);
        return;
    }
    if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
        std::set<std::string> body;
        collect_free_vars(e->body, body);
        body.erase(e->binder);
        out.insert(body.begin(), body.end());
        collect_free_vars(e->bound, out);
        return;
    }
    const auto& e = std::get<NaryEllipsisTerm>(n);
    for (const auto& p : e.prefix) collect_free_vars(p, out);
    std::set<std::string> body;
    collect_free_vars(e.body, body);
    body.erase(e.binder);
    out.insert(body.begin(), body.end());
    collect_free_vars(e.bound, out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
    std::set<std::string> out;
    collect_free_vars(t, out);
    return out;
}

std::size_t complexity(const Term& t) {
    const auto& n = t.node().v;
    if (std::holds_alternative<NumeralTerm>(n) || std::holds_alternative<VarTerm>(n) ||
        std::holds_alternative<ConstTerm>(n))
        return 1;
    if (const auto* a = std::get_if<AppTerm>(&n)) {
        std::size_t size = 1;
        for (const auto& arg : a->args) size += complexity(arg);
        return size;
    }
    if (const auto* a = std::get_if<VarAppTerm>(&n)) {
        std::size_t size = 1;
        for (const auto& arg : a->args) size += complexity(arg);
        return size;
    }
    if (const auto* e = std::get_if<EllipsisTerm>(&n))
        return 1 + complexity(e->body) + complexity(e->bound);
    const auto& e = std::get<NaryEllipsisTerm>(n);
    std::size_t size = 1 + complexity(e.body) + complexity(e.bound);
    for (const auto& p : e.prefix) size += complexity(p);
    return size;
}

std::optional<std::string> well_formedness_error(const Term& t, const Signature& sig) {
    const auto& n = t.node().v;
    if (std::holds_alternative<NumeralTerm>(n)) return std::nullopt;
    if (const auto* v = std::get_if<VarTerm>(&n)) {
        if (!is_variable_name(v->name, sig))
            return "'" + v->name + "' is not usable as a variable";
        return std::nullopt;
    }
    if (const auto* c = std::get_if<ConstTerm>(&n)) {
        if (!sig.is_named_constant(c->name))
            return "'" + c->name + "' is not a declared constant";
        return std::nullopt;
    }
    if (const auto* a = std::get_if<AppTerm>(&n)) {
        auto arity = sig.fixed_arity(a->fn);
        if (!arity) return "'" + a->fn + "' is not a declared function symbol";
        if (*arity != a->args.size())
            return "'" + a->fn + "' expects " + std::to_string(*arity) + " arguments, got " +
                   std::to_string(a->args.size());
        for (const auto& arg : a->args)
            if (auto err = well_formedness_error(arg, sig)) return err;
        return std::nullopt;
    }
    if (const auto* a = std::get_if<VarAppTerm>(&n)) {
        if (!sig.is_variadic(a->fn)) return "'" + a->fn + "' is not a declared variadic symbol";
        if (a->args.empty()) return "'" + a->fn + "' applied to no arguments";
        for (const auto& arg : a->args)
            if (auto err = well_formedness_error(arg, sig)) return err;
        return std::nullopt;
    }
    if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
        if (!sig.is_variadic(e->fn)) return "'" + e->fn + "' is not a declared variadic symbol";
        if (!is_variable_name(e->binder, sig))
            return "'" + e->binder + "' is not usable as an ellipsis binder";
        if (auto err = well_formedness_error(e->body, sig)) return err;
        return well_formedness_error(e->bound, sig);
    }
    const auto& e = std::get<NaryEllipsisTerm>(n);
    auto arity = sig.nary_prefix_arity(e.fn);
    if (!arity) return "'" + e.fn + "' is not a declared n-ary-by-variadic symbol";
    if (*arity != e.prefix.size())
        return "'" + e.fn + "' expects a prefix of " + std::to_string(*arity) + " terms, got " +
               std::to_string(e.prefix.size());
    if (!is_variable_name(e.binder, sig))
        return "'" + e.binder + "' is not usable as an ellipsis binder";
    for (const auto& p : e.prefix)
        if (auto err = well_formedness_error(p, sig)) return err;
    if (auto err = well_formedness_error(e.body, sig)) return err;
    return well_formedness_error(e.bound, sig);
}

}  // namespace vfl
