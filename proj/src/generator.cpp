#include "vfl/generator.hpp"

#include <algorithm>
#include <stdexcept>

namespace vfl {

TermGenerator::TermGenerator(GeneratorConfig cfg, Signature sig)
    : cfg_(std::move(cfg)), sig_(std::move(sig)), rng_(cfg_.seed) {
    if (cfg_.max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
    if (cfg_.variable_pool.empty()) throw std::invalid_argument("the variable pool is empty");
    if (!sig_.ok()) throw std::invalid_argument("signature does not validate");
    for (const auto& v : cfg_.variable_pool)
        if (!is_variable_name(v, sig_))
            throw std::invalid_argument("'" + v + "' is not usable as a variable here");
    for (const auto& d : sig_.decls()) {
        switch (d.kind) {
            case SymbolKind::FixedFn: fixed_.emplace_back(d.name, d.arity); break;
            case SymbolKind::VariadicFn: variadic_.push_back(d.name); break;
            case SymbolKind::NaryByVariadicFn: nary_.emplace_back(d.name, d.arity); break;
            case SymbolKind::Predicate: preds_.push_back(d.name); break;
            case SymbolKind::NamedConstant: break;  // unused by generation
        }
    }
}

double TermGenerator::chance() {
    // Portable uniform double in [0,1): top 53 bits of the engine output.
    return double(rng_() >> 11) * (1.0 / 9007199254740992.0);
}

std::uint64_t TermGenerator::below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

std::string TermGenerator::variable() {
    return cfg_.variable_pool[below(cfg_.variable_pool.size())];
}

Nat TermGenerator::numeral_value() { return Nat(below(cfg_.max_numeral + 1)); }

Assignment TermGenerator::assignment(std::uint64_t max_value) {
    std::map<std::string, Nat> bindings;
    for (const auto& v : cfg_.variable_pool) bindings[v] = Nat(below(max_value + 1));
    return Assignment(std::move(bindings));
}

Term TermGenerator::term() { return term_at_depth(cfg_.max_depth); }

Term TermGenerator::bound_term() {
    // Shallow and additive: bounds decide ellipsis widths, so they stay
    // small to keep evaluation inside the default budgets.
    auto leaf = [&]() { return chance() < 0.5 ? Term::numeral(numeral_value())
                                              : Term::var(variable()); };
    double roll = chance();
    bool have_plus = sig_.fixed_arity("+") == std::size_t{2};
    if (roll < 0.55 || !have_plus) return leaf();
    return Term::app("+", {leaf(), leaf()});
}

Term TermGenerator::simple_term(const std::vector<std::string>& avoid) {
    std::vector<std::string> pool;
    for (const auto& v : cfg_.variable_pool)
        if (std::find(avoid.begin(), avoid.end(), v) == avoid.end()) pool.push_back(v);
    auto leaf = [&]() {
        if (pool.empty() || chance() < 0.55) return Term::numeral(numeral_value());
        return Term::var(pool[below(pool.size())]);
    };
    double roll = chance();
    if (roll < 0.60 || fixed_.empty()) return leaf();
    if (roll < 0.90) {
        const auto& [fn, arity] = fixed_[below(fixed_.size())];
        std::vector<Term> args;
        for (std::size_t i = 0; i < arity; ++i) args.push_back(leaf());
        return Term::app(fn, std::move(args));
    }
    if (!variadic_.empty()) {
        // A shallow ellipsis keeps the substitutable-rate interesting.
        const std::string& fn = variadic_[below(variadic_.size())];
        std::string binder = variable();
        return Term::ellipsis(fn, leaf(), binder, leaf());
    }
    return leaf();
}

Term TermGenerator::term_at_depth(std::size_t depth) {
    auto leaf = [&]() {
        return chance() < 0.5 ? Term::numeral(numeral_value()) : Term::var(variable());
    };
    if (depth == 0) return leaf();

    double p_ellipsis = variadic_.empty() && nary_.empty() ? 0.0 : cfg_.ellipsis_probability;
    double p_leaf = 0.22;
    double p_app = fixed_.empty() ? 0.0 : 0.33;
    double p_varapp = variadic_.empty() ? 0.0 : 0.20;
    double total = p_leaf + p_app + p_varapp + p_ellipsis;
    double roll = chance() * total;

    if ((roll -= p_leaf) < 0) return leaf();
    if (p_app > 0 && (roll -= p_app) < 0) {
        const auto& [fn, arity] = fixed_[below(fixed_.size())];
        std::vector<Term> args;
        for (std::size_t i = 0; i < arity; ++i) args.push_back(term_at_depth(depth - 1));
        return Term::app(fn, std::move(args));
    }
    if (p_varapp > 0 && (roll -= p_varapp) < 0) {
        const std::string& fn = variadic_[below(variadic_.size())];
        std::size_t argc = 1 + below(2);  // branching capped at 2
        std::vector<Term> args;
        for (std::size_t i = 0; i < argc; ++i) args.push_back(term_at_depth(depth - 1));
        return Term::var_app(fn, std::move(args));
    }
    // Ellipsis (n-ary-by-variadic when the signature has such symbols).
    // A compound bound costs one level of body depth, which keeps the node
    // count inside the 2^(depth+1) envelope the size bound promises.
    bool use_nary = !nary_.empty() && (variadic_.empty() || chance() < 0.3);
    std::string binder = variable();
    bool compound_bound = depth >= 2 && chance() < 0.3;
    Term body = term_at_depth(depth - (compound_bound ? 2 : 1));
    Term bound = compound_bound
                     ? bound_term()
                     : (chance() < 0.5 ? Term::numeral(numeral_value()) : Term::var(variable()));
    if (use_nary) {
        const auto& [fn, arity] = nary_[below(nary_.size())];
        std::vector<Term> prefix;
        for (std::size_t i = 0; i < arity; ++i) prefix.push_back(term_at_depth(0));
        return Term::nary_ellipsis(fn, std::move(prefix), std::move(body), std::move(binder),
                                   std::move(bound));
    }
    const std::string& fn = variadic_[below(variadic_.size())];
    return Term::ellipsis(fn, std::move(body), std::move(binder), std::move(bound));
}

Formula TermGenerator::formula() { return formula_at_depth(std::min<std::size_t>(cfg_.max_depth, 4)); }

Formula TermGenerator::formula_at_depth(std::size_t depth) {
    auto atom = [&]() -> Formula {
        if (!preds_.empty() && chance() < 0.2) {
            const std::string& p = preds_[below(preds_.size())];
            std::size_t arity = *sig_.predicate_arity(p);
            std::vector<Term> args;
            for (std::size_t i = 0; i < arity; ++i) args.push_back(term_at_depth(2));
            return Formula::pred(p, std::move(args));
        }
        return Formula::eq(term_at_depth(2), term_at_depth(2));
    };
    if (depth == 0) return atom();
    double roll = chance();
    if (roll < 0.32) return atom();
    if (roll < 0.44) return Formula::negate(formula_at_depth(depth - 1));
    if (roll < 0.57)
        return Formula::conj(formula_at_depth(depth - 1), formula_at_depth(depth - 1));
    if (roll < 0.70)
        return Formula::disj(formula_at_depth(depth - 1), formula_at_depth(depth - 1));
    if (roll < 0.78)
        return Formula::implies(formula_at_depth(depth - 1), formula_at_depth(depth - 1));
    if (roll < 0.83)
        return Formula::iff(formula_at_depth(depth - 1), formula_at_depth(depth - 1));
    bool have_leq = sig_.fixed_arity("<=") == std::size_t{2};
    if (roll < 0.93 && have_leq && cfg_.variable_pool.size() >= 2) {
        // Guarded quantifier, the shape the exact search path understands.
        std::string binder = variable();
        std::string bound = variable();
        while (bound == binder) bound = variable();
        Formula guard = Formula::eq(Term::app("<=", {Term::var(binder), Term::var(bound)}),
                                    Term::numeral(std::uint64_t{1}));
        Formula body = formula_at_depth(depth - 1);
        return chance() < 0.5
                   ? Formula::exists(binder, Formula::conj(std::move(guard), std::move(body)))
                   : Formula::forall(binder, Formula::implies(std::move(guard), std::move(body)));
    }
    std::string var = variable();
    Formula body = formula_at_depth(depth - 1);
    return chance() < 0.5 ? Formula::exists(var, std::move(body))
                          : Formula::forall(var, std::move(body));
}

Formula TermGenerator::uqf_formula() {
    return uqf_at_depth(std::min<std::size_t>(cfg_.max_depth, 3));
}

Formula TermGenerator::uqf_at_depth(std::size_t depth) {
    auto atom = [&]() { return Formula::eq(term_at_depth(2), term_at_depth(2)); };
    if (depth == 0) return atom();
    double roll = chance();
    if (roll < 0.30) return atom();
    if (roll < 0.40) return Formula::negate(uqf_at_depth(depth - 1));
    if (roll < 0.55) return Formula::conj(uqf_at_depth(depth - 1), uqf_at_depth(depth - 1));
    if (roll < 0.67) return Formula::disj(uqf_at_depth(depth - 1), uqf_at_depth(depth - 1));
    if (roll < 0.75) return Formula::implies(uqf_at_depth(depth - 1), uqf_at_depth(depth - 1));
    if (roll < 0.80) return Formula::iff(uqf_at_depth(depth - 1), uqf_at_depth(depth - 1));
    if (cfg_.variable_pool.size() < 2)
        return atom();
    std::string binder = variable();
    std::string bound = variable();
    while (bound == binder) bound = variable();
    Formula guard = Formula::eq(Term::app("<=", {Term::var(binder), Term::var(bound)}),
                                Term::numeral(std::uint64_t{1}));
    Formula body = uqf_at_depth(depth - 1);
    return roll < 0.90
               ? Formula::exists(binder, Formula::conj(std::move(guard), std::move(body)))
               : Formula::forall(binder, Formula::implies(std::move(guard), std::move(body)));
}

Term gen_term(const GeneratorConfig& cfg, const Signature& sig) {
    return TermGenerator(cfg, sig).term();
}

}  // namespace vfl
