#include "vfl/qelim.hpp"

#include <stdexcept>
#include <utility>

namespace vfl {

namespace {

// Guard shape =( <=(x, y), 1 ) with x the binder and y a distinct variable.
// Returns the bound variable name or an explanation of the mismatch.
std::variant<std::string, std::string_view> guard_bound(const Formula& guard,
                                                        const std::string& binder) {
    const auto* eq = std::get_if<EqFormula>(&guard.node().v);
    if (!eq) return std::string_view("the guard must be the atom <=(x,y) = 1");
    const auto* one = std::get_if<NumeralTerm>(&eq->rhs.node().v);
    if (!one || one->value != 1)
        return std::string_view("the guard must compare against the numeral 1");
    const auto* app = std::get_if<AppTerm>(&eq->lhs.node().v);
    if (!app || app->fn != "<=" || app->args.size() != 2)
        return std::string_view("the guard must apply the binary symbol <=");
    const auto* lhs = std::get_if<VarTerm>(&app->args[0].node().v);
    if (!lhs || lhs->name != binder)
        return std::string_view("the guard must bound the quantified variable itself");
    const auto* rhs = std::get_if<VarTerm>(&app->args[1].node().v);
    if (!rhs) return std::string_view("the guard bound must be a variable");
    if (rhs->name == binder)
        return std::string_view("the guard variables must be distinct");
    return rhs->name;
}

std::variant<UqfCert, NotUqf> certify(const Formula& f) {
    const auto& n = f.node().v;
    if (std::holds_alternative<EqFormula>(n)) return UqfCert{UqfCert::Clause::Atom, "", "", {}};
    if (std::holds_alternative<PredFormula>(n))
        return NotUqf{"predicate atoms are not allowed", f};

    auto two_children = [&](UqfCert::Clause clause, const Formula& lhs,
                            const Formula& rhs) -> std::variant<UqfCert, NotUqf> {
        auto a = certify(lhs);
        if (auto* bad = std::get_if<NotUqf>(&a)) return *bad;
        auto b = certify(rhs);
        if (auto* bad = std::get_if<NotUqf>(&b)) return *bad;
        UqfCert cert{clause, "", "", {}};
        cert.children.push_back(std::move(std::get<UqfCert>(a)));
        cert.children.push_back(std::move(std::get<UqfCert>(b)));
        return cert;
    };

    if (const auto* nf = std::get_if<NotFormula>(&n)) {
        auto a = certify(nf->body);
        if (auto* bad = std::get_if<NotUqf>(&a)) return *bad;
        UqfCert cert{UqfCert::Clause::Not, "", "", {}};
        cert.children.push_back(std::move(std::get<UqfCert>(a)));
        return cert;
    }
    if (const auto* a = std::get_if<AndFormula>(&n))
        return two_children(UqfCert::Clause::And, a->lhs, a->rhs);
    if (const auto* o = std::get_if<OrFormula>(&n))
        return two_children(UqfCert::Clause::Or, o->lhs, o->rhs);
    if (const auto* i = std::get_if<ImpliesFormula>(&n))
        return two_children(UqfCert::Clause::Implies, i->lhs, i->rhs);
    if (const auto* i = std::get_if<IffFormula>(&n))
        return two_children(UqfCert::Clause::Iff, i->lhs, i->rhs);

    if (const auto* q = std::get_if<ExistsFormula>(&n)) {
        const auto* body = std::get_if<AndFormula>(&q->body.node().v);
        if (!body)
            return NotUqf{"an existential must have the guarded shape exists x (x <= y & ...)", f};
        auto bound = guard_bound(body->lhs, q->var);
        if (auto* why = std::get_if<std::string_view>(&bound)) return NotUqf{std::string(*why), f};
        auto inner = certify(body->rhs);
        if (auto* bad = std::get_if<NotUqf>(&inner)) return *bad;
        UqfCert cert{UqfCert::Clause::BoundedExists, q->var, std::get<std::string>(bound), {}};
        cert.children.push_back(std::move(std::get<UqfCert>(inner)));
        return cert;
    }
    const auto& q = std::get<ForallFormula>(n);
    const auto* body = std::get_if<ImpliesFormula>(&q.body.node().v);
    if (!body)
        return NotUqf{"a universal must have the guarded shape forall x (x <= y -> ...)", f};
    auto bound = guard_bound(body->lhs, q.var);
    if (auto* why = std::get_if<std::string_view>(&bound)) return NotUqf{std::string(*why), f};
    auto inner = certify(body->rhs);
    if (auto* bad = std::get_if<NotUqf>(&inner)) return *bad;
    UqfCert cert{UqfCert::Clause::BoundedForall, q.var, std::get<std::string>(bound), {}};
    cert.children.push_back(std::move(std::get<UqfCert>(inner)));
    return cert;
}

Term t_not(Term t) { return Term::app("d", {std::move(t), Term::numeral(std::uint64_t{0})}); }

Term t_and(Term a, Term b) {
    return Term::app("d", {Term::app("+", {std::move(a), std::move(b)}),
                           Term::numeral(std::uint64_t{2})});
}

Term t_implies(Term a, Term b) { return t_not(t_and(std::move(a), t_not(std::move(b)))); }

// The recursive construction, with the derived connectives reduced to the
// proved clauses: a|b as ~(~a & ~b), a->b as ~(a & ~b), a<->b as
// (a->b)&(b->a), and the guarded forall as the negated guarded exists.
Term build(const Formula& f, const UqfCert& cert) {
    const auto& n = f.node().v;
    switch (cert.clause) {
        case UqfCert::Clause::Atom: {
            const auto& eq = std::get<EqFormula>(n);
            return Term::app("d", {eq.lhs, eq.rhs});
        }
        case UqfCert::Clause::And: {
            const auto& a = std::get<AndFormula>(n);
            return t_and(build(a.lhs, cert.children[0]), build(a.rhs, cert.children[1]));
        }
        case UqfCert::Clause::Or: {
            const auto& o = std::get<OrFormula>(n);
            return t_not(t_and(t_not(build(o.lhs, cert.children[0])),
                               t_not(build(o.rhs, cert.children[1]))));
        }
        case UqfCert::Clause::Not: {
            const auto& nf = std::get<NotFormula>(n);
            return t_not(build(nf.body, cert.children[0]));
        }
        case UqfCert::Clause::Implies: {
            const auto& i = std::get<ImpliesFormula>(n);
            return t_implies(build(i.lhs, cert.children[0]), build(i.rhs, cert.children[1]));
        }
        case UqfCert::Clause::Iff: {
            const auto& i = std::get<IffFormula>(n);
            Term a = build(i.lhs, cert.children[0]);
            Term b = build(i.rhs, cert.children[1]);
            return t_and(t_implies(a, b), t_implies(b, a));
        }
        case UqfCert::Clause::BoundedExists: {
            const auto& q = std::get<ExistsFormula>(n);
            const auto& body = std::get<AndFormula>(q.body.node().v);
            Term inner = build(body.rhs, cert.children[0]);
            return Term::ellipsis("G", std::move(inner), cert.binder, Term::var(cert.bound));
        }
        case UqfCert::Clause::BoundedForall: {
            const auto& q = std::get<ForallFormula>(n);
            const auto& body = std::get<ImpliesFormula>(q.body.node().v);
            Term inner = t_not(build(body.rhs, cert.children[0]));
            return t_not(Term::ellipsis("G", std::move(inner), cert.binder, Term::var(cert.bound)));
        }
    }
    throw std::logic_error("unhandled certificate clause");
}

void require_symbol(bool present, const char* what) {
    if (!present)
        throw std::invalid_argument(std::string("the signature must declare ") + what);
}

}  // namespace

UqfFormula::UqfFormula(Formula f, UqfCert cert, Signature sig)
    : formula_(std::move(f)), cert_(std::move(cert)), sig_(std::move(sig)) {}

std::variant<UqfFormula, NotUqf> classify(const Formula& f, const Signature& sig) {
    require_symbol(sig.fixed_arity("<=") == std::size_t{2}, "the binary symbol <=");
    auto cert = certify(f);
    if (auto* bad = std::get_if<NotUqf>(&cert)) return *bad;
    return UqfFormula(f, std::move(std::get<UqfCert>(cert)), sig);
}

Term eliminate(const UqfFormula& f) {
    const Signature& sig = f.sig();
    require_symbol(sig.fixed_arity("+") == std::size_t{2}, "the binary symbol +");
    require_symbol(sig.fixed_arity("d") == std::size_t{2}, "the binary symbol d");
    require_symbol(sig.is_variadic("G"), "the variadic symbol G");
    return build(f.formula(), f.certificate());
}

Formula eliminate_to_formula(const UqfFormula& f) {
    return Formula::eq(eliminate(f), Term::numeral(std::uint64_t{1}));
}

}  // namespace vfl
