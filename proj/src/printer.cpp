#include "vfl/printer.hpp"

#include <sstream>

namespace vfl {

namespace {

void print_term_to(const Term& t, std::ostream& out) {
    const auto& n = t.node().v;
    if (const auto* num = std::get_if<NumeralTerm>(&n)) {
        out << to_decimal(num->value);
        return;
    }
    if (const auto* v = std::get_if<VarTerm>(&n)) {
        out << v->name;
        return;
    }
    if (const auto* c = std::get_if<ConstTerm>(&n)) {
        out << c->name;
        return;
    }
    auto print_args = [&](const std::vector<Term>& args) {
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i > 0) out << ",";
            print_term_to(args[i], out);
        }
    };
    if (const auto* a = std::get_if<AppTerm>(&n)) {
        out << a->fn << "(";
        print_args(a->args);
        out << ")";
        return;
    }
    if (const auto* a = std::get_if<VarAppTerm>(&n)) {
        out << a->fn << "(";
        print_args(a->args);
        out << ")";
        return;
    }
    auto print_ellipsis_part = [&](const Term& body, const std::string& binder,
                                   const Term& bound) {
        print_term_to(body, out);
        out << "(0) ..." << binder << " ";
        print_term_to(body, out);
        out << "(";
        print_term_to(bound, out);
        out << ")";
    };
    if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
        out << e->fn << "(";
        print_ellipsis_part(e->body, e->binder, e->bound);
        out << ")";
        return;
    }
    const auto& e = std::get<NaryEllipsisTerm>(n);
    out << e.fn << "(";
    print_args(e.prefix);
    out << ";";
    print_ellipsis_part(e.body, e.binder, e.bound);
    out << ")";
}

// Binding strength; a node parenthesizes itself when placed in a context
// that requires more than it provides. Quantifiers provide the least (their
// body runs to the end), atoms the most.
enum Prec : int {
    kQuantifier = 0,
    kIff = 1,
    kImplies = 2,
    kOr = 3,
    kAnd = 4,
    kNot = 5,
    kAtom = 6,
};

void print_formula_to(const Formula& f, std::ostream& out, int min_prec) {
    const auto& n = f.node().v;
    auto wrapped = [&](int prec, auto&& body) {
        if (prec < min_prec) {
            out << "(";
            body();
            out << ")";
        } else {
            body();
        }
    };
    if (const auto* eq = std::get_if<EqFormula>(&n)) {
        out << "=(";
        print_term_to(eq->lhs, out);
        out << ",";
        print_term_to(eq->rhs, out);
        out << ")";
        return;
    }
    if (const auto* p = std::get_if<PredFormula>(&n)) {
        out << p->pred << "(";
        for (std::size_t i = 0; i < p->args.size(); ++i) {
            if (i > 0) out << ",";
            print_term_to(p->args[i], out);
        }
        out << ")";
        return;
    }
    if (const auto* nf = std::get_if<NotFormula>(&n)) {
        wrapped(kNot, [&] {
            out << "~";
            print_formula_to(nf->body, out, kNot);
        });
        return;
    }
    if (const auto* a = std::get_if<AndFormula>(&n)) {
        wrapped(kAnd, [&] {
            print_formula_to(a->lhs, out, kAnd);
            out << " & ";
            print_formula_to(a->rhs, out, kAnd + 1);
        });
        return;
    }
    if (const auto* o = std::get_if<OrFormula>(&n)) {
        wrapped(kOr, [&] {
            print_formula_to(o->lhs, out, kOr);
            out << " | ";
            print_formula_to(o->rhs, out, kOr + 1);
        });
        return;
    }
    if (const auto* i = std::get_if<ImpliesFormula>(&n)) {
        wrapped(kImplies, [&] {
            print_formula_to(i->lhs, out, kImplies + 1);
            out << " -> ";
            print_formula_to(i->rhs, out, kImplies);
        });
        return;
    }
    if (const auto* i = std::get_if<IffFormula>(&n)) {
        wrapped(kIff, [&] {
            print_formula_to(i->lhs, out, kIff + 1);
            out << " <-> ";
            print_formula_to(i->rhs, out, kIff);
        });
        return;
    }
    if (const auto* q = std::get_if<ForallFormula>(&n)) {
        wrapped(kQuantifier, [&] {
            out << "forall " << q->var << ". ";
            print_formula_to(q->body, out, kQuantifier);
        });
        return;
    }
    const auto& q = std::get<ExistsFormula>(n);
    wrapped(kQuantifier, [&] {
        out << "exists " << q.var << ". ";
        print_formula_to(q.body, out, kQuantifier);
    });
}

}  // namespace

std::string print_term(const Term& t) {
    std::ostringstream out;
    print_term_to(t, out);
    return out.str();
}

std::string print_formula(const Formula& f) {
    std::ostringstream out;
    print_formula_to(f, out, 0);
    return out.str();
}

}  // namespace vfl
