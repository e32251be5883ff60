#include "vfl/props.hpp"

#include "vfl/borel.hpp"
#include "vfl/generator.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"
#include "vfl/qelim.hpp"
#include "vfl/semantics.hpp"
#include "vfl/subst.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

namespace vfl {

namespace {

struct SuiteName {
    Suite suite;
    std::string_view name;
};

constexpr SuiteName kSuiteNames[] = {
    {Suite::SubstLemma, "subst-lemma"},   {Suite::FormulaSubst, "formula-subst"},
    {Suite::InterpEquiv, "interp-equiv"}, {Suite::Commute, "commute"},
    {Suite::QelimSound, "qelim-sound"},   {Suite::Roundtrip, "roundtrip"},
    {Suite::BorelPrefix, "borel-prefix"},
};

GeneratorConfig base_config(std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = 4;
    cfg.max_numeral = 6;
    cfg.variable_pool = {"x", "y", "z", "w"};
    cfg.ellipsis_probability = 0.3;
    return cfg;
}

}  // namespace

std::vector<Term> shrink_candidates(const Term& t) {
    std::vector<Term> out;
    const Term zero = Term::numeral(std::uint64_t{0});
    if (!(t == zero)) out.push_back(zero);
    const auto& n = t.node().v;
    if (const auto* a = std::get_if<AppTerm>(&n)) {
        for (std::size_t i = 0; i < a->args.size(); ++i) {
            out.push_back(a->args[i]);
            std::vector<Term> args = a->args;
            args[i] = zero;
            out.push_back(Term::app(a->fn, std::move(args)));
        }
    } else if (const auto* a = std::get_if<VarAppTerm>(&n)) {
        for (std::size_t i = 0; i < a->args.size(); ++i) {
            out.push_back(a->args[i]);
            std::vector<Term> args = a->args;
            args[i] = zero;
            out.push_back(Term::var_app(a->fn, std::move(args)));
        }
        if (a->args.size() > 1) out.push_back(Term::var_app(a->fn, {a->args[0]}));
    } else if (const auto* e = std::get_if<EllipsisTerm>(&n)) {
        out.push_back(e->body);
        out.push_back(e->bound);
        out.push_back(Term::var_app(e->fn, {e->body}));
        out.push_back(Term::ellipsis(e->fn, zero, e->binder, e->bound));
        out.push_back(Term::ellipsis(e->fn, e->body, e->binder, zero));
    } else if (const auto* e = std::get_if<NaryEllipsisTerm>(&n)) {
        out.push_back(e->body);
        out.push_back(e->bound);
        for (const auto& p : e->prefix) out.push_back(p);
        out.push_back(Term::nary_ellipsis(e->fn, e->prefix, zero, e->binder, e->bound));
        out.push_back(Term::nary_ellipsis(e->fn, e->prefix, e->body, e->binder, zero));
    }
    return out;
}

Term shrink_term(Term t, const std::function<bool(const Term&)>& still_fails) {
    for (int rounds = 0; rounds < 200; ++rounds) {
        bool progress = false;
        for (const Term& cand : shrink_candidates(t)) {
            if (complexity(cand) >= complexity(t)) continue;
            bool fails = false;
            try {
                fails = still_fails(cand);
            } catch (...) {
                fails = false;  // a shrink that breaks preconditions is discarded
            }
            if (fails) {
                t = cand;
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    return t;
}

namespace {

void enumerate_assignments(const std::vector<std::string>& vars, std::uint64_t max_value,
                           const std::function<void(const Assignment&)>& visit) {
    std::vector<std::uint64_t> values(vars.size(), 0);
    while (true) {
        std::map<std::string, Nat> bindings;
        for (std::size_t i = 0; i < vars.size(); ++i) bindings[vars[i]] = Nat(values[i]);
        visit(Assignment(std::move(bindings)));
        std::size_t pos = 0;
        while (pos < values.size()) {
            if (++values[pos] <= max_value) break;
            values[pos] = 0;
            ++pos;
        }
        if (pos == values.size()) return;
    }
}

PropReport run_interp_equiv(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::InterpEquiv, cases, 0, 0, 0, {}};
    Model m = std_model();
    TermGenerator gen(base_config(seed), std_signature());
    for (std::uint64_t i = 0; i < cases; ++i) {
        Term t = gen.term();
        Assignment s = gen.assignment(6);
        ++report.attempts;
        ++report.cases_checked;
        try {
            if (interp_syntactic(t, m, s) == interp_semantic(t, m, s)) continue;
        } catch (const std::exception& e) {
            report.failures.push_back({i, std::string("evaluation error: ") + e.what() +
                                              " on " + print_term(t)});
            continue;
        }
        Term small = shrink_term(t, [&](const Term& cand) {
            return interp_syntactic(cand, m, s) != interp_semantic(cand, m, s);
        });
        report.failures.push_back(
            {i, "interpretations differ on " + print_term(small) + " under " + s.to_text() +
                    ": syntactic=" + to_decimal(interp_syntactic(small, m, s)) +
                    " semantic=" + to_decimal(interp_semantic(small, m, s))});
    }
    return report;
}

PropReport run_subst_lemma(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::SubstLemma, cases, 0, 0, 0, {}};
    Model m = std_model();
    TermGenerator gen(base_config(seed), std_signature());
    for (std::uint64_t i = 0; i < cases; ++i) {
        Term r = gen.term();
        Term t = gen.simple_term();
        std::string x = gen.variable();
        Assignment s = gen.assignment(6);
        ++report.attempts;
        if (!substitutable(t, x, r)) continue;
        ++report.cases_checked;
        auto holds = [&](const Term& target) {
            if (!substitutable(t, x, target)) return true;  // hypothesis gone
            Nat lhs = interp_syntactic(substitute(target, x, t), m, s);
            Nat ts = interp_syntactic(t, m, s);
            Nat rhs = interp_syntactic(target, m, s.with(x, ts));
            return lhs == rhs;
        };
        try {
            if (holds(r)) continue;
        } catch (const std::exception& e) {
            report.failures.push_back({i, std::string("evaluation error: ") + e.what() +
                                              " on " + print_term(r)});
            continue;
        }
        Term small = shrink_term(r, [&](const Term& cand) { return !holds(cand); });
        report.failures.push_back(
            {i, "substitution lemma fails for r=" + print_term(small) + ", t=" + print_term(t) +
                    ", x=" + x + " under " + s.to_text()});
    }
    return report;
}

PropReport run_formula_subst(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::FormulaSubst, cases, 0, 0, 0, {}};
    Model m = std_model();
    GeneratorConfig cfg = base_config(seed);
    cfg.variable_pool = {"x", "y", "z"};
    cfg.max_depth = 3;
    cfg.ellipsis_probability = 0.2;
    TermGenerator gen(cfg, std_signature());
    const EvalBudget budget;
    for (std::uint64_t i = 0; i < cases; ++i) {
        Formula f = gen.uqf_formula();
        Term t = gen.simple_term();
        std::string x = gen.variable();
        Assignment s = gen.assignment(6);
        ++report.attempts;
        if (!substitutable_formula(t, x, f)) continue;
        ++report.cases_checked;
        try {
            Truth lhs = satisfies(substitute_formula(f, x, t), m, s, budget, 16);
            Truth rhs = satisfies(f, m, s.with(x, interp_syntactic(t, m, s)), budget, 16);
            if (lhs == Truth::Unknown || rhs == Truth::Unknown) {
                ++report.skipped_indefinite;
                continue;
            }
            if (lhs == rhs) continue;
            report.failures.push_back(
                {i, "formula substitution lemma fails for " + print_formula(f) +
                        ", t=" + print_term(t) + ", x=" + x + " under " + s.to_text() + ": " +
                        std::string(truth_name(lhs)) + " vs " + std::string(truth_name(rhs))});
        } catch (const std::exception& e) {
            report.failures.push_back({i, std::string("evaluation error: ") + e.what() + " on " +
                                              print_formula(f)});
        }
    }
    return report;
}

PropReport run_commute(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::Commute, cases, 0, 0, 0, {}};
    TermGenerator gen(base_config(seed), std_signature());
    const std::uint64_t max_attempts = cases * 50;
    while (report.cases_checked < cases && report.attempts < max_attempts) {
        ++report.attempts;
        Term r = gen.term();
        std::string x = gen.variable();
        std::string y = gen.variable();
        if (x == y) continue;
        Term t = gen.simple_term({y});  // y never occurs free in t
        Term c = Term::numeral(gen.numeral_value());
        if (!substitutable(t, x, r)) continue;
        ++report.cases_checked;
        auto holds = [&](const Term& target) {
            if (!substitutable(t, x, target)) return true;
            return substitute(substitute(target, x, t), y, c) ==
                   substitute(substitute(target, y, c), x, t);
        };
        if (holds(r)) continue;
        Term small = shrink_term(r, [&](const Term& cand) { return !holds(cand); });
        report.failures.push_back({report.attempts,
                                   "substitutions do not commute on r=" + print_term(small) +
                                       ", t=" + print_term(t) + ", x=" + x + ", y=" + y +
                                       ", c=" + print_term(c)});
    }
    if (report.cases_checked < cases)
        report.failures.push_back(
            {report.attempts, "generator exhausted attempts before reaching the requested "
                              "number of qualifying instances"});
    return report;
}

PropReport run_qelim_sound(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::QelimSound, cases, 0, 0, 0, {}};
    Model m = std_model();
    Signature sig = std_signature();
    GeneratorConfig cfg = base_config(seed);
    cfg.variable_pool = {"x", "y", "z"};
    cfg.max_depth = 3;
    cfg.max_numeral = 4;
    cfg.ellipsis_probability = 0.15;
    TermGenerator gen(cfg, sig);
    const EvalBudget budget;
    for (std::uint64_t i = 0; i < cases; ++i) {
        Formula f = gen.uqf_formula();
        ++report.attempts;
        auto cls = classify(f, sig);
        if (std::holds_alternative<NotUqf>(cls)) {
            report.failures.push_back(
                {i, "generator produced a formula outside the fragment: " + print_formula(f)});
            continue;
        }
        ++report.cases_checked;
        const UqfFormula& uqf = std::get<UqfFormula>(cls);
        Term t_f = eliminate(uqf);
        if (free_vars(t_f) != free_vars(f)) {
            report.failures.push_back({i, "free variables changed: " + print_formula(f) +
                                              " vs " + print_term(t_f)});
            continue;
        }
        auto fv_set = free_vars(f);
        std::vector<std::string> fv(fv_set.begin(), fv_set.end());
        bool failed = false;
        std::string what;
        enumerate_assignments(fv, 6, [&](const Assignment& s) {
            if (failed) return;
            Truth sat = satisfies(f, m, s, budget, 8);
            Truth nsat = satisfies(Formula::negate(f), m, s, budget, 8);
            Nat value = interp_syntactic(t_f, m, s);
            if (sat == Truth::Unknown || nsat == Truth::Unknown) {
                failed = true;
                what = "satisfaction not definite under " + s.to_text();
                return;
            }
            if (value != 0 && value != 1) {
                failed = true;
                what = "characteristic term valued " + to_decimal(value) + " under " + s.to_text();
                return;
            }
            if ((sat == Truth::True) != (value == 1) || (nsat == Truth::True) != (value == 0)) {
                failed = true;
                what = "term value " + to_decimal(value) + " disagrees with satisfaction under " +
                       s.to_text();
            }
        });
        if (failed)
            report.failures.push_back(
                {i, what + " for " + print_formula(f) + " with t_phi = " + print_term(t_f)});
    }
    return report;
}

PropReport run_roundtrip(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::Roundtrip, cases, 0, 0, 0, {}};
    Signature sig = std_signature();
    TermGenerator gen(base_config(seed), sig);
    for (std::uint64_t i = 0; i < cases; ++i) {
        Term t = gen.term();
        ++report.attempts;
        ++report.cases_checked;
        std::string text = print_term(t);
        try {
            if (parse_term(text, sig) == t) continue;
            Term small = shrink_term(
                t, [&](const Term& cand) { return !(parse_term(print_term(cand), sig) == cand); });
            report.failures.push_back({i, "round trip broke on " + print_term(small)});
        } catch (const ParseError& e) {
            report.failures.push_back(
                {i, "printed term does not parse: " + text + " (" + e.what() + ")"});
        }
    }
    std::uint64_t formula_cases = cases >= 5 ? cases / 5 : cases;
    for (std::uint64_t i = 0; i < formula_cases; ++i) {
        Formula f = gen.formula();
        ++report.attempts;
        ++report.cases_checked;
        std::string text = print_formula(f);
        try {
            if (parse_formula(text, sig) == f) continue;
            report.failures.push_back({cases + i, "round trip broke on formula " + text});
        } catch (const ParseError& e) {
            report.failures.push_back(
                {cases + i, "printed formula does not parse: " + text + " (" + e.what() + ")"});
        }
    }
    return report;
}

PropReport run_borel_prefix(std::uint64_t cases, std::uint64_t seed) {
    PropReport report{Suite::BorelPrefix, cases, 0, 0, 0, {}};
    IotaTable iota;
    iota.arity = 1;
    iota.default_seq = {Nat(1), Nat(2)};
    Formula sentence = build_sentence(iota, 1, SentenceKind::Sigma);
    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };

    auto describe = [](const std::vector<Nat>& prefix) {
        std::string text = "(";
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (i > 0) text += ",";
            text += to_decimal(prefix[i]);
        }
        return text + ")";
    };

    for (std::uint64_t i = 0; i < cases; ++i) {
        ++report.attempts;
        ++report.cases_checked;
        std::vector<Nat> prefix;
        std::size_t len = 1 + below(6);
        for (std::size_t j = 0; j < len; ++j) prefix.emplace_back(below(5));

        bool extends = prefix.size() >= 2 && prefix[0] == 1 && prefix[1] == 2;
        bool locked_mismatch = false;  // a disagreement inside the compared window
        for (std::size_t j = 0; j < std::min<std::size_t>(2, prefix.size()); ++j)
            if (prefix[j] != iota.default_seq[j]) locked_mismatch = true;

        std::uint64_t cutoff = 8;
        Truth v = check_membership(BorModel{prefix, iota}, sentence, cutoff);

        if (extends && v != Truth::True) {
            report.failures.push_back({i, "prefix " + describe(prefix) +
                                              " extends the cylinder but the verdict is " +
                                              std::string(truth_name(v))});
            continue;
        }
        if (!extends && v == Truth::True) {
            report.failures.push_back(
                {i, "prefix " + describe(prefix) + " does not extend the cylinder but came back true"});
            continue;
        }
        if (!extends && prefix.size() >= 2 && v != Truth::Unknown) {
            report.failures.push_back({i, "prefix " + describe(prefix) +
                                              " expected an unknown verdict, got " +
                                              std::string(truth_name(v))});
            continue;
        }

        // Stability under prefix extension and a larger cutoff.
        std::vector<Nat> extended = prefix;
        std::size_t extra = 1 + below(3);
        for (std::size_t j = 0; j < extra; ++j) extended.emplace_back(below(5));
        Truth v2 = check_membership(BorModel{extended, iota}, sentence, cutoff + below(8));
        if (v != Truth::Unknown && v2 != v) {
            report.failures.push_back({i, "verdict flipped from " + std::string(truth_name(v)) +
                                              " to " + std::string(truth_name(v2)) +
                                              " when extending " + describe(prefix)});
            continue;
        }
        if (locked_mismatch && v2 != Truth::Unknown) {
            report.failures.push_back(
                {i, "a prefix disagreeing inside the window can never settle, yet " +
                        describe(extended) + " came back " + std::string(truth_name(v2))});
        }
    }
    return report;
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
    for (const auto& entry : kSuiteNames)
        if (entry.name == name) return entry.suite;
    return std::nullopt;
}

std::string_view suite_name(Suite suite) {
    for (const auto& entry : kSuiteNames)
        if (entry.suite == suite) return entry.name;
    return "?";
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {
        Suite::SubstLemma, Suite::FormulaSubst, Suite::InterpEquiv, Suite::Commute,
        Suite::QelimSound, Suite::Roundtrip,    Suite::BorelPrefix,
    };
    return suites;
}

std::string PropReport::render() const {
    std::ostringstream out;
    out << "suite: " << suite_name(suite) << "\n";
    out << "cases requested: " << cases_requested << "\n";
    out << "instances generated: " << attempts << "\n";
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.1f", precondition_rate() * 100.0);
    out << "preconditions held: " << cases_checked << " (" << rate << "%)\n";
    if (skipped_indefinite > 0)
        out << "indefinite comparisons skipped: " << skipped_indefinite << "\n";
    out << "failures: " << failures.size() << "\n";
    for (const auto& f : failures) out << "  case " << f.case_index << ": " << f.description << "\n";
    out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

PropReport run_props(Suite suite, std::uint64_t cases, std::uint64_t seed) {
    switch (suite) {
        case Suite::SubstLemma: return run_subst_lemma(cases, seed);
        case Suite::FormulaSubst: return run_formula_subst(cases, seed);
        case Suite::InterpEquiv: return run_interp_equiv(cases, seed);
        case Suite::Commute: return run_commute(cases, seed);
        case Suite::QelimSound: return run_qelim_sound(cases, seed);
        case Suite::Roundtrip: return run_roundtrip(cases, seed);
        case Suite::BorelPrefix: return run_borel_prefix(cases, seed);
    }
    throw std::logic_error("unhandled suite");
}

}  // namespace vfl
