#include "vfl/semantics.hpp"

#include "vfl/printer.hpp"
#include "vfl/subst.hpp"

#include <cassert>
#include <sstream>
#include <utility>

namespace vfl {

Assignment::Assignment(std::map<std::string, Nat> bindings, Nat default_value)
    : bindings_(std::move(bindings)), default_(std::move(default_value)) {}

const Nat& Assignment::get(const std::string& var) const {
    auto it = bindings_.find(var);
    return it == bindings_.end() ? default_ : it->second;
}

Assignment Assignment::with(const std::string& var, Nat value) const {
    Assignment next = *this;
    next.bindings_[var] = std::move(value);
    return next;
}

Assignment Assignment::parse(std::string_view text) {
    std::map<std::string, Nat> bindings;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && text[i] != '=' && text[i] != ',') ++i;
        if (i >= text.size() || text[i] != '=')
            throw std::invalid_argument("assignment entries look like var=value");
        std::string var(text.substr(start, i - start));
        while (!var.empty() && std::isspace(static_cast<unsigned char>(var.back()))) var.pop_back();
        if (!is_lexable_identifier(var))
            throw std::invalid_argument("'" + var + "' is not a variable name");
        ++i;
        skip_ws();
        std::size_t vstart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (vstart == i) throw std::invalid_argument("assignment value must be a natural number");
        bindings[var] = Nat(std::string(text.substr(vstart, i - vstart)));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("assignment entries are separated by commas");
            ++i;
            skip_ws();
        }
    }
    return Assignment(std::move(bindings));
}

std::string Assignment::to_text() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [var, value] : bindings_) {
        if (!first) out << ",";
        first = false;
        out << var << "=" << to_decimal(value);
    }
    return out.str();
}

Model::Model(Signature sig) : sig_(std::move(sig)) {}

Model& Model::interpret_fixed(const std::string& name, FixedFn fn) {
    fixed_[name] = std::move(fn);
    return *this;
}
Model& Model::interpret_variadic(const std::string& name, VariadicFn fn) {
    variadic_[name] = std::move(fn);
    return *this;
}
Model& Model::interpret_nary_variadic(const std::string& name, NaryVariadicFn fn) {
    nary_variadic_[name] = std::move(fn);
    return *this;
}
Model& Model::interpret_predicate(const std::string& name, PredicateFn fn) {
    predicates_[name] = std::move(fn);
    return *this;
}
Model& Model::interpret_constant(const std::string& name, Nat value) {
    constants_[name] = std::move(value);
    return *this;
}
Model& Model::designate_leq(const std::string& name) {
    leq_symbol_ = name;
    return *this;
}

namespace {

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name,
                                        const char* what) {
    auto it = map.find(name);
    if (it == map.end())
        throw EvalError(std::string("no interpretation for ") + what + " '" + name + "'");
    return it->second;
}

}  // namespace

const FixedFn& Model::fixed(const std::string& name) const {
    return lookup(fixed_, name, "function symbol");
}
const VariadicFn& Model::variadic(const std::string& name) const {
    return lookup(variadic_, name, "variadic symbol");
}
const NaryVariadicFn& Model::nary_variadic(const std::string& name) const {
    return lookup(nary_variadic_, name, "n-ary-by-variadic symbol");
}
const PredicateFn& Model::predicate(const std::string& name) const {
    return lookup(predicates_, name, "predicate symbol");
}
const Nat& Model::constant(const std::string& name) const {
    return lookup(constants_, name, "constant symbol");
}

GeneralizedModel::GeneralizedModel(Signature sig) : sig_(std::move(sig)) {}

GeneralizedModel& GeneralizedModel::interpret_fixed(const std::string& name, FixedFn fn) {
    fixed_[name] = std::move(fn);
    return *this;
}
GeneralizedModel& GeneralizedModel::interpret_variadic(const std::string& name,
                                                       GeneralizedVariadicFn fn) {
    variadic_[name] = std::move(fn);
    return *this;
}
GeneralizedModel& GeneralizedModel::interpret_nary_variadic(const std::string& name,
                                                            NaryVariadicFn fn) {
    nary_variadic_[name] = std::move(fn);
    return *this;
}
GeneralizedModel& GeneralizedModel::interpret_constant(const std::string& name, Nat value) {
    constants_[name] = std::move(value);
    return *this;
}

const FixedFn& GeneralizedModel::fixed(const std::string& name) const {
    return lookup(fixed_, name, "function symbol");
}
const GeneralizedVariadicFn& GeneralizedModel::variadic(const std::string& name) const {
    return lookup(variadic_, name, "variadic symbol");
}
const NaryVariadicFn& GeneralizedModel::nary_variadic(const std::string& name) const {
    return lookup(nary_variadic_, name, "n-ary-by-variadic symbol");
}
const Nat& GeneralizedModel::constant(const std::string& name) const {
    return lookup(constants_, name, "constant symbol");
}

GeneralizedModel GeneralizedModel::truncation_of(const Model& m) {
    GeneralizedModel gm(m.sig());
    for (const auto& d : m.sig().decls()) {
        switch (d.kind) {
            case SymbolKind::FixedFn:
                gm.interpret_fixed(d.name, m.fixed(d.name));
                break;
            case SymbolKind::VariadicFn: {
                VariadicFn base = m.variadic(d.name);
                gm.interpret_variadic(d.name, [base](const StreamFn& stream, const Nat& bound) {
                    std::vector<Nat> vals;
                    for (Nat k = 0; k <= bound; ++k) vals.push_back(stream(k));
                    return base(vals);
                });
                break;
            }
            case SymbolKind::NaryByVariadicFn:
                gm.interpret_nary_variadic(d.name, m.nary_variadic(d.name));
                break;
            case SymbolKind::NamedConstant:
                gm.interpret_constant(d.name, m.constant(d.name));
                break;
            case SymbolKind::Predicate:
                break;  // predicates play no role in term interpretation
        }
    }
    return gm;
}

std::string_view truth_name(Truth v) {
    switch (v) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Unknown: return "unknown";
    }
    return "?";
}

namespace {

Truth kleene_not(Truth v) {
    if (v == Truth::Unknown) return Truth::Unknown;
    return v == Truth::True ? Truth::False : Truth::True;
}

// One evaluation: shared step counter across the whole recursion so a
// runaway quantifier search or ellipsis cascade fails cleanly.
class Evaluator {
  public:
    Evaluator(const Model* m, const GeneralizedModel* gm, EvalBudget budget)
        : model_(m), gen_model_(gm), budget_(budget) {
        if (budget_.max_ellipsis_width == 0 || budget_.max_total_steps == 0)
            throw std::invalid_argument("evaluation budgets must be positive");
    }

    Nat syntactic(const Term& t, const Assignment& s) {
        tick();
        const auto& n = t.node().v;
        if (const auto* num = std::get_if<NumeralTerm>(&n)) return num->value;
        if (const auto* v = std::get_if<VarTerm>(&n)) return s.get(v->name);
        if (const auto* c = std::get_if<ConstTerm>(&n)) return model_->constant(c->name);
        if (const auto* a = std::get_if<AppTerm>(&n))
            return model_->fixed(a->fn)(eval_args_syntactic(a->args, s));
        if (const auto* a = std::get_if<VarAppTerm>(&n)) {
            if (a->args.empty()) throw EvalError("variadic application with no arguments");
            return model_->variadic(a->fn)(eval_args_syntactic(a->args, s));
        }
        if (const auto* e = std::get_if<EllipsisTerm>(&n))
            return model_->variadic(e->fn)(
                unfold_syntactic(t, e->body, e->binder, e->bound, s));
        const auto& e = std::get<NaryEllipsisTerm>(n);
        return model_->nary_variadic(e.fn)(eval_args_syntactic(e.prefix, s),
                                           unfold_syntactic(t, e.body, e.binder, e.bound, s));
    }

    Nat semantic(const Term& t, const Assignment& s) {
        tick();
        const auto& n = t.node().v;
        if (const auto* num = std::get_if<NumeralTerm>(&n)) return num->value;
        if (const auto* v = std::get_if<VarTerm>(&n)) return s.get(v->name);
        if (const auto* c = std::get_if<ConstTerm>(&n)) return model_->constant(c->name);
        if (const auto* a = std::get_if<AppTerm>(&n))
            return model_->fixed(a->fn)(eval_args_semantic(a->args, s));
        if (const auto* a = std::get_if<VarAppTerm>(&n)) {
            if (a->args.empty()) throw EvalError("variadic application with no arguments");
            return model_->variadic(a->fn)(eval_args_semantic(a->args, s));
        }
        if (const auto* e = std::get_if<EllipsisTerm>(&n))
            return model_->variadic(e->fn)(unfold_semantic(e->body, e->binder, e->bound, s));
        const auto& e = std::get<NaryEllipsisTerm>(n);
        return model_->nary_variadic(e.fn)(eval_args_semantic(e.prefix, s),
                                           unfold_semantic(e.body, e.binder, e.bound, s));
    }

    Nat generalized(const Term& t, const Assignment& s, StreamMode mode) {
        tick();
        const auto& n = t.node().v;
        if (const auto* num = std::get_if<NumeralTerm>(&n)) return num->value;
        if (const auto* v = std::get_if<VarTerm>(&n)) return s.get(v->name);
        if (const auto* c = std::get_if<ConstTerm>(&n)) return gen_model_->constant(c->name);
        if (const auto* a = std::get_if<AppTerm>(&n)) {
            std::vector<Nat> vals;
            vals.reserve(a->args.size());
            for (const auto& arg : a->args) vals.push_back(generalized(arg, s, mode));
            return gen_model_->fixed(a->fn)(vals);
        }
        if (const auto* a = std::get_if<VarAppTerm>(&n)) {
            // Explicit arguments present as the stream k -> args[k] with
            // bound one less than the argument count.
            if (a->args.empty()) throw EvalError("variadic application with no arguments");
            std::vector<Nat> vals;
            vals.reserve(a->args.size());
            for (const auto& arg : a->args) vals.push_back(generalized(arg, s, mode));
            StreamFn stream = [&vals](const Nat& k) -> Nat {
                auto idx = to_u64(k);
                if (!idx || *idx >= vals.size())
                    throw OutOfPrefix("stream probed past the written arguments");
                return vals[static_cast<std::size_t>(*idx)];
            };
            return gen_model_->variadic(a->fn)(stream, Nat(vals.size() - 1));
        }
        if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
            Nat bound = generalized(e->bound, s, mode);
            StreamFn stream = [this, e, &s, mode](const Nat& k) -> Nat {
                guard_width(k);
                tick();
                if (mode == StreamMode::Syntactic) {
                    Term unfolded = substitute(e->body, e->binder, Term::numeral(Nat(k)));
                    return generalized(unfolded, s, mode);
                }
                return generalized(e->body, s.with(e->binder, k), mode);
            };
            return gen_model_->variadic(e->fn)(stream, bound);
        }
        const auto& e = std::get<NaryEllipsisTerm>(n);
        std::vector<Nat> prefix;
        prefix.reserve(e.prefix.size());
        for (const auto& p : e.prefix) prefix.push_back(generalized(p, s, mode));
        Nat bound = generalized(e.bound, s, mode);
        std::uint64_t width = checked_width(bound);
        std::vector<Nat> tail;
        tail.reserve(width + 1);
        for (std::uint64_t k = 0; k <= width; ++k) {
            if (mode == StreamMode::Syntactic) {
                Term unfolded = substitute(e.body, e.binder, Term::numeral(k));
                tail.push_back(generalized(unfolded, s, mode));
            } else {
                tail.push_back(generalized(e.body, s.with(e.binder, Nat(k)), mode));
            }
        }
        return gen_model_->nary_variadic(e.fn)(prefix, tail);
    }

    Truth satisfies(const Formula& f, const Assignment& s, std::uint64_t cutoff) {
        tick();
        const auto& n = f.node().v;
        if (const auto* eq = std::get_if<EqFormula>(&n)) {
            try {
                return semantic(eq->lhs, s) == semantic(eq->rhs, s) ? Truth::True : Truth::False;
            } catch (const OutOfPrefix&) {
                return Truth::Unknown;
            }
        }
        if (const auto* p = std::get_if<PredFormula>(&n)) {
            try {
                return model_->predicate(p->pred)(eval_args_semantic(p->args, s)) ? Truth::True
                                                                                  : Truth::False;
            } catch (const OutOfPrefix&) {
                return Truth::Unknown;
            }
        }
        if (const auto* nf = std::get_if<NotFormula>(&n))
            return kleene_not(satisfies(nf->body, s, cutoff));
        if (const auto* a = std::get_if<AndFormula>(&n)) {
            Truth lhs = satisfies(a->lhs, s, cutoff);
            if (lhs == Truth::False) return Truth::False;
            Truth rhs = satisfies(a->rhs, s, cutoff);
            if (rhs == Truth::False) return Truth::False;
            if (lhs == Truth::True && rhs == Truth::True) return Truth::True;
            return Truth::Unknown;
        }
        if (const auto* o = std::get_if<OrFormula>(&n)) {
            Truth lhs = satisfies(o->lhs, s, cutoff);
            if (lhs == Truth::True) return Truth::True;
            Truth rhs = satisfies(o->rhs, s, cutoff);
            if (rhs == Truth::True) return Truth::True;
            if (lhs == Truth::False && rhs == Truth::False) return Truth::False;
            return Truth::Unknown;
        }
        if (const auto* i = std::get_if<ImpliesFormula>(&n)) {
            Truth lhs = satisfies(i->lhs, s, cutoff);
            if (lhs == Truth::False) return Truth::True;
            Truth rhs = satisfies(i->rhs, s, cutoff);
            if (rhs == Truth::True) return Truth::True;
            if (lhs == Truth::True) return rhs;
            return Truth::Unknown;
        }
        if (const auto* i = std::get_if<IffFormula>(&n)) {
            Truth lhs = satisfies(i->lhs, s, cutoff);
            Truth rhs = satisfies(i->rhs, s, cutoff);
            if (lhs == Truth::Unknown || rhs == Truth::Unknown) return Truth::Unknown;
            return lhs == rhs ? Truth::True : Truth::False;
        }
        if (const auto* q = std::get_if<ExistsFormula>(&n)) {
            if (const auto* a = std::get_if<AndFormula>(&q->body.node().v))
                if (auto bound = match_guard(a->lhs, q->var))
                    return bounded_search(q->var, *bound, a->rhs, s, cutoff,
                                          /*existential=*/true);
            return unbounded_search(q->var, q->body, s, cutoff, /*existential=*/true);
        }
        const auto& q = std::get<ForallFormula>(n);
        if (const auto* i = std::get_if<ImpliesFormula>(&q.body.node().v))
            if (auto bound = match_guard(i->lhs, q.var))
                return bounded_search(q.var, *bound, i->rhs, s, cutoff, /*existential=*/false);
        return unbounded_search(q.var, q.body, s, cutoff, /*existential=*/false);
    }

  private:
    void tick() {
        if (++steps_ > budget_.max_total_steps)
            throw BudgetExceeded("evaluation exceeded " + std::to_string(budget_.max_total_steps) +
                                 " steps");
    }

    void guard_width(const Nat& index) {
        if (index + 1 > Nat(budget_.max_ellipsis_width))
            throw BudgetExceeded("stream probe at " + to_decimal(index) +
                                 " exceeds the ellipsis width budget of " +
                                 std::to_string(budget_.max_ellipsis_width));
    }

    std::uint64_t checked_width(const Nat& bound) {
        if (bound + 1 > Nat(budget_.max_ellipsis_width))
            throw BudgetExceeded("ellipsis width " + to_decimal(bound + 1) +
                                 " exceeds the budget of " +
                                 std::to_string(budget_.max_ellipsis_width));
        return *to_u64(bound);
    }

    std::vector<Nat> eval_args_syntactic(const std::vector<Term>& args, const Assignment& s) {
        std::vector<Nat> vals;
        vals.reserve(args.size());
        for (const auto& arg : args) vals.push_back(syntactic(arg, s));
        return vals;
    }

    std::vector<Nat> eval_args_semantic(const std::vector<Term>& args, const Assignment& s) {
        std::vector<Nat> vals;
        vals.reserve(args.size());
        for (const auto& arg : args) vals.push_back(semantic(arg, s));
        return vals;
    }

    // The list body(x|0)^s, ..., body(x|w)^s where w interprets the bound.
    std::vector<Nat> unfold_syntactic([[maybe_unused]] const Term& whole, const Term& body,
                                      const std::string& binder, const Term& bound,
                                      const Assignment& s) {
        Nat w = syntactic(bound, s);
        std::uint64_t width = checked_width(w);
        std::vector<Nat> vals;
        vals.reserve(width + 1);
        for (std::uint64_t k = 0; k <= width; ++k) {
            Term unfolded = substitute(body, binder, Term::numeral(k));
            // Termination measure: numerals substitute without growth, so
            // each unfolded copy is strictly simpler than the whole term.
            assert(complexity(unfolded) == complexity(body));
            assert(complexity(unfolded) < complexity(whole));
            vals.push_back(syntactic(unfolded, s));
        }
        return vals;
    }

    // The list body_{s(x|0)}, ..., body_{s(x|w)}.
    std::vector<Nat> unfold_semantic(const Term& body, const std::string& binder,
                                     const Term& bound, const Assignment& s) {
        Nat w = semantic(bound, s);
        std::uint64_t width = checked_width(w);
        std::vector<Nat> vals;
        vals.reserve(width + 1);
        for (std::uint64_t k = 0; k <= width; ++k)
            vals.push_back(semantic(body, s.with(binder, Nat(k))));
        return vals;
    }

    // Guard shape =( <=(x, B), 1 ) with x the binder, <= the model's
    // designated order symbol, and x not free in B; then the search space
    // 0..B^s is exhaustive.
    std::optional<Term> match_guard(const Formula& guard, const std::string& binder) const {
        if (model_->leq_symbol().empty()) return std::nullopt;
        const auto* eq = std::get_if<EqFormula>(&guard.node().v);
        if (!eq) return std::nullopt;
        const auto* one = std::get_if<NumeralTerm>(&eq->rhs.node().v);
        if (!one || one->value != 1) return std::nullopt;
        const auto* app = std::get_if<AppTerm>(&eq->lhs.node().v);
        if (!app || app->fn != model_->leq_symbol() || app->args.size() != 2) return std::nullopt;
        const auto* lhsVar = std::get_if<VarTerm>(&app->args[0].node().v);
        if (!lhsVar || lhsVar->name != binder) return std::nullopt;
        if (free_vars(app->args[1]).count(binder)) return std::nullopt;
        return app->args[1];
    }

    Truth bounded_search(const std::string& var, const Term& bound, const Formula& body,
                         const Assignment& s, std::uint64_t cutoff, bool existential) {
        Nat limit;
        try {
            limit = semantic(bound, s);
        } catch (const OutOfPrefix&) {
            return Truth::Unknown;
        }
        bool saw_unknown = false;
        for (Nat k = 0; k <= limit; ++k) {
            tick();
            Truth v = satisfies(body, s.with(var, k), cutoff);
            if (existential && v == Truth::True) return Truth::True;
            if (!existential && v == Truth::False) return Truth::False;
            if (v == Truth::Unknown) saw_unknown = true;
        }
        if (saw_unknown) return Truth::Unknown;
        return existential ? Truth::False : Truth::True;
    }

    // 0..cutoff can only certify a witness or a counterexample; exhausting
    // it proves nothing over an infinite universe.
    Truth unbounded_search(const std::string& var, const Formula& body, const Assignment& s,
                           std::uint64_t cutoff, bool existential) {
        for (std::uint64_t k = 0; k <= cutoff; ++k) {
            tick();
            Truth v = satisfies(body, s.with(var, Nat(k)), cutoff);
            if (existential && v == Truth::True) return Truth::True;
            if (!existential && v == Truth::False) return Truth::False;
        }
        return Truth::Unknown;
    }

    const Model* model_ = nullptr;
    const GeneralizedModel* gen_model_ = nullptr;
    EvalBudget budget_;
    std::uint64_t steps_ = 0;
};

}  // namespace

Nat interp_syntactic(const Term& t, const Model& m, const Assignment& s,
                     const EvalBudget& budget) {
    return Evaluator(&m, nullptr, budget).syntactic(t, s);
}

Nat interp_semantic(const Term& t, const Model& m, const Assignment& s, const EvalBudget& budget) {
    return Evaluator(&m, nullptr, budget).semantic(t, s);
}

Nat interp_generalized(const Term& t, const GeneralizedModel& gm, const Assignment& s,
                       const EvalBudget& budget, StreamMode mode) {
    return Evaluator(nullptr, &gm, budget).generalized(t, s, mode);
}

Truth satisfies(const Formula& f, const Model& m, const Assignment& s, const EvalBudget& budget,
                std::uint64_t quantifier_cutoff) {
    return Evaluator(&m, nullptr, budget).satisfies(f, s, quantifier_cutoff);
}

Model std_model() {
    Model m(std_signature());
    m.interpret_fixed("+", [](const std::vector<Nat>& a) { return a[0] + a[1]; });
    m.interpret_fixed("*", [](const std::vector<Nat>& a) { return a[0] * a[1]; });
    m.interpret_fixed("d", [](const std::vector<Nat>& a) { return Nat(a[0] == a[1] ? 1 : 0); });
    m.interpret_fixed("<=", [](const std::vector<Nat>& a) { return Nat(a[0] <= a[1] ? 1 : 0); });
    m.interpret_variadic("G", [](const std::vector<Nat>& a) {
        for (const auto& v : a)
            if (v != 0) return Nat(1);
        return Nat(0);
    });
    m.interpret_variadic("S", [](const std::vector<Nat>& a) {
        Nat sum = 0;
        for (const auto& v : a) sum += v;
        return sum;
    });
    m.designate_leq("<=");
    return m;
}

}  // namespace vfl
