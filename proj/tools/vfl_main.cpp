#include "vfl/borel.hpp"
#include "vfl/errors.hpp"
#include "vfl/generator.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"
#include "vfl/props.hpp"
#include "vfl/qelim.hpp"
#include "vfl/semantics.hpp"
#include "vfl/signature.hpp"
#include "vfl/subst.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <variant>

namespace {

using namespace vfl;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int truth_exit(Truth v) {
    switch (v) {
        case Truth::True: return kExitTrue;
        case Truth::False: return kExitFalse;
        case Truth::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

// Inputs come from the positional argument, or stdin when it is absent
// or "-".
std::string input_or_stdin(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::string text((std::istreambuf_iterator<char>(std::cin)),
                     std::istreambuf_iterator<char>());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
    return text;
}

Signature load_signature(const std::string& path) {
    Signature sig = path.empty() ? std_signature() : Signature::from_file(path);
    auto violations = sig.validate();
    if (!violations.empty()) {
        std::string what = "signature does not validate:";
        for (const auto& v : violations) what += "\n  " + v;
        throw std::runtime_error(what);
    }
    return sig;
}

// Standard interpretations for whichever of the well-known symbols the
// signature declares; everything else stays uninterpreted and fails only
// if evaluation actually reaches it.
Model model_for(const Signature& sig) {
    Model m(sig);
    if (sig.fixed_arity("+") == std::size_t{2})
        m.interpret_fixed("+", [](const std::vector<Nat>& a) { return a[0] + a[1]; });
    if (sig.fixed_arity("*") == std::size_t{2})
        m.interpret_fixed("*", [](const std::vector<Nat>& a) { return a[0] * a[1]; });
    if (sig.fixed_arity("d") == std::size_t{2})
        m.interpret_fixed("d", [](const std::vector<Nat>& a) { return Nat(a[0] == a[1] ? 1 : 0); });
    if (sig.fixed_arity("<=") == std::size_t{2}) {
        m.interpret_fixed("<=",
                          [](const std::vector<Nat>& a) { return Nat(a[0] <= a[1] ? 1 : 0); });
        m.designate_leq("<=");
    }
    if (sig.is_variadic("G"))
        m.interpret_variadic("G", [](const std::vector<Nat>& a) {
            for (const auto& v : a)
                if (v != 0) return Nat(1);
            return Nat(0);
        });
    if (sig.is_variadic("S"))
        m.interpret_variadic("S", [](const std::vector<Nat>& a) {
            Nat sum = 0;
            for (const auto& v : a) sum += v;
            return sum;
        });
    return m;
}

void report_parse_error(const std::string& src, const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::cerr << "  " << src << "\n";
    std::cerr << "  " << std::string(e.span().begin, ' ')
              << std::string(std::max<std::size_t>(1, e.span().end - e.span().begin), '^') << "\n";
}

std::variant<Term, Formula> parse_term_or_formula(const std::string& src, const Signature& sig) {
    std::optional<ParseError> term_err;
    try {
        return parse_term(src, sig);
    } catch (const ParseError& e) {
        term_err = e;
    }
    try {
        return parse_formula(src, sig);
    } catch (const ParseError& e) {
        // report whichever parse got further
        throw term_err->span().begin > e.span().begin ? *term_err : e;
    }
}

struct EvalOptions {
    std::string sig_path;
    std::string assign_text;
    std::uint64_t cutoff = kDefaultQuantifierCutoff;
    EvalBudget budget;
    std::string input;
};

int run_eval(const EvalOptions& opt) {
    Signature sig = load_signature(opt.sig_path);
    Model m = model_for(sig);
    Assignment s = Assignment::parse(opt.assign_text);
    auto parsed = parse_term_or_formula(input_or_stdin(opt.input), sig);
    if (const Term* t = std::get_if<Term>(&parsed)) {
        std::cout << "term: " << print_term(*t) << "\n";
        Nat value = interp_syntactic(*t, m, s, opt.budget);
        std::cout << "value: " << to_decimal(value) << "\n";
        return kExitTrue;
    }
    const Formula& f = std::get<Formula>(parsed);
    std::cout << "formula: " << print_formula(f) << "\n";
    Truth v = satisfies(f, m, s, opt.budget, opt.cutoff);
    std::cout << "verdict: " << truth_name(v) << "\n";
    return truth_exit(v);
}

struct SubstOptions {
    std::string sig_path;
    std::string var;
    std::string term_text;
    std::string target_text;
};

int run_subst(const SubstOptions& opt) {
    Signature sig = load_signature(opt.sig_path);
    if (!is_variable_name(opt.var, sig))
        throw std::runtime_error("'" + opt.var + "' is not usable as a variable");
    Term t = parse_term(opt.term_text, sig);
    Term r = parse_term(input_or_stdin(opt.target_text), sig);
    std::cout << "input: " << print_term(r) << "\n";
    std::cout << "substituting: " << print_term(t) << " for " << opt.var << "\n";
    std::cout << "result: " << print_term(substitute(r, opt.var, t)) << "\n";
    std::cout << "substitutable: " << (substitutable(t, opt.var, r) ? "true" : "false") << "\n";
    return kExitTrue;
}

struct QelimOptions {
    std::string sig_path;
    bool verify = false;
    std::uint64_t values = 3;
    std::string input;
};

int run_qelim(const QelimOptions& opt) {
    Signature sig = load_signature(opt.sig_path);
    Formula f = parse_formula(input_or_stdin(opt.input), sig);
    auto result = classify(f, sig);
    if (const NotUqf* bad = std::get_if<NotUqf>(&result)) {
        std::cerr << "not in the bounded-quantifier fragment: " << bad->reason << "\n";
        std::cerr << "  at: " << print_formula(bad->offending) << "\n";
        return kExitUsage;
    }
    const UqfFormula& uqf = std::get<UqfFormula>(result);
    Term t_f = eliminate(uqf);
    std::cout << "formula: " << print_formula(f) << "\n";
    std::cout << "term: " << print_term(t_f) << "\n";
    std::cout << "quantifier-free: " << print_formula(eliminate_to_formula(uqf)) << "\n";
    if (!opt.verify) return kExitTrue;

    Model m = model_for(sig);
    auto fv_set = free_vars(f);
    std::vector<std::string> fv(fv_set.begin(), fv_set.end());
    std::vector<std::uint64_t> values(fv.size(), 0);
    std::uint64_t total = 0;
    std::uint64_t agreements = 0;
    bool done = false;
    while (!done) {
        std::map<std::string, Nat> bindings;
        for (std::size_t i = 0; i < fv.size(); ++i) bindings[fv[i]] = Nat(values[i]);
        Assignment s(std::move(bindings));
        ++total;
        Truth sat = satisfies(f, m, s, {}, 8);
        Nat value = interp_syntactic(t_f, m, s);
        bool ok = sat != Truth::Unknown && (value == 0 || value == 1) &&
                  ((sat == Truth::True) == (value == 1));
        if (ok) ++agreements;
        std::size_t pos = 0;
        while (pos < values.size()) {
            if (++values[pos] <= opt.values) break;
            values[pos] = 0;
            ++pos;
        }
        done = pos == values.size();
    }
    std::cout << "verify: " << total << " assignments with values <= " << opt.values << "\n";
    if (agreements == total) {
        std::cout << "verify: ok\n";
        return kExitTrue;
    }
    std::cout << "verify: " << (total - agreements) << " disagreements\n";
    return kExitFalse;
}

struct BorelOptions {
    std::string iota_path;
    std::uint64_t n = 0;  // 0: take the table's arity
    std::string kind = "sigma";
    std::string prefix_text;
    std::uint64_t cutoff = 8;
};

int run_borel(const BorelOptions& opt) {
    IotaTable iota = IotaTable::from_file(opt.iota_path);
    if (opt.n > 0) {
        if (!iota.entries.empty() && iota.arity != opt.n)
            throw std::runtime_error("--n disagrees with the table's tuple size");
        iota.arity = static_cast<std::size_t>(opt.n);
    }
    SentenceKind kind;
    if (opt.kind == "sigma") kind = SentenceKind::Sigma;
    else if (opt.kind == "pi") kind = SentenceKind::Pi;
    else throw std::runtime_error("--kind must be sigma or pi");

    std::vector<Nat> prefix;
    std::size_t i = 0;
    const std::string& text = opt.prefix_text;
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::runtime_error("--prefix holds comma-separated naturals");
        prefix.emplace_back(text.substr(start, i - start));
        if (i < text.size()) {
            if (text[i] != ',') throw std::runtime_error("--prefix holds comma-separated naturals");
            ++i;
        }
    }

    Formula sentence = build_sentence(iota, iota.arity, kind);
    std::cout << "sentence: " << print_formula(sentence) << "\n";
    Truth v = check_membership(BorModel{std::move(prefix), std::move(iota)}, sentence, opt.cutoff);
    std::cout << "verdict: " << truth_name(v) << "\n";
    return truth_exit(v);
}

struct PropsOptions {
    std::string suite;
    std::uint64_t cases = 1000;
    std::uint64_t seed = 42;
};

int run_props_cmd(const PropsOptions& opt) {
    auto suite = suite_from_name(opt.suite);
    if (!suite) {
        std::string names;
        for (Suite s : all_suites()) names += " " + std::string(suite_name(s));
        throw std::runtime_error("unknown suite '" + opt.suite + "'; available:" + names);
    }
    PropReport report = run_props(*suite, opt.cases, opt.seed);
    std::cout << report.render();
    return report.passed() ? kExitTrue : kExitFalse;
}

struct GenOptions {
    std::string sig_path;
    std::uint64_t seed = 0;
    std::uint64_t cases = 1;
    std::uint64_t depth = 4;
    std::uint64_t max_numeral = 8;
    double ellipsis_prob = 0.25;
    bool formulas = false;
};

int run_gen(const GenOptions& opt) {
    Signature sig = load_signature(opt.sig_path);
    GeneratorConfig cfg;
    cfg.seed = opt.seed;
    cfg.max_depth = static_cast<std::size_t>(opt.depth);
    cfg.max_numeral = opt.max_numeral;
    cfg.ellipsis_probability = opt.ellipsis_prob;
    TermGenerator gen(cfg, sig);
    for (std::uint64_t i = 0; i < opt.cases; ++i) {
        if (opt.formulas)
            std::cout << print_formula(gen.formula()) << "\n";
        else
            std::cout << print_term(gen.term()) << "\n";
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-order logic with variadic function symbols and ellipsis terms"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a term or decide a formula");
    eval->add_option("--sig", eval_opt.sig_path, "signature file (default: built-in standard)");
    eval->add_option("--assign", eval_opt.assign_text, "assignment, e.g. \"x=3,y=5\"");
    eval->add_option("--cutoff", eval_opt.cutoff, "unbounded-quantifier search cutoff");
    eval->add_option("--width", eval_opt.budget.max_ellipsis_width, "ellipsis width budget");
    eval->add_option("--steps", eval_opt.budget.max_total_steps, "total step budget");
    eval->add_option("input", eval_opt.input, "term or formula (stdin when omitted or -)");

    SubstOptions subst_opt;
    CLI::App* subst = app.add_subcommand("subst", "substitute a term for a variable");
    subst->add_option("--sig", subst_opt.sig_path, "signature file");
    subst->add_option("--var", subst_opt.var, "variable to replace")->required();
    subst->add_option("--term", subst_opt.term_text, "replacement term")->required();
    subst->add_option("target", subst_opt.target_text,
                      "term substituted into (stdin when omitted or -)");

    QelimOptions qelim_opt;
    CLI::App* qelim = app.add_subcommand("qelim", "compile a bounded-quantifier formula to a term");
    qelim->add_option("--sig", qelim_opt.sig_path, "signature file");
    qelim->add_flag("--verify", qelim_opt.verify, "brute-force the equivalence over small values");
    qelim->add_option("--values", qelim_opt.values, "verification value ceiling");
    qelim->add_option("input", qelim_opt.input, "formula (stdin when omitted or -)");

    BorelOptions borel_opt;
    CLI::App* borel = app.add_subcommand("borel", "membership sentences over finite prefixes");
    borel->add_option("--iota", borel_opt.iota_path, "iota table file")->required();
    borel->add_option("--n", borel_opt.n, "sentence rank (default: table arity)");
    borel->add_option("--kind", borel_opt.kind, "sigma or pi");
    borel->add_option("--prefix", borel_opt.prefix_text, "known prefix of f, e.g. \"1,2,7\"")
        ->required();
    borel->add_option("--cutoff", borel_opt.cutoff, "quantifier search cutoff");

    PropsOptions props_opt;
    CLI::App* props = app.add_subcommand("props", "run a randomized property suite");
    props->add_option("--suite", props_opt.suite, "suite name")->required();
    props->add_option("--cases", props_opt.cases, "number of cases");
    props->add_option("--seed", props_opt.seed, "generator seed");

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "print random well-formed terms");
    gen->add_option("--sig", gen_opt.sig_path, "signature file");
    gen->add_option("--seed", gen_opt.seed, "generator seed");
    gen->add_option("--cases", gen_opt.cases, "how many to print");
    gen->add_option("--depth", gen_opt.depth, "maximum term depth");
    gen->add_option("--max-numeral", gen_opt.max_numeral, "largest generated numeral");
    gen->add_option("--ellipsis-prob", gen_opt.ellipsis_prob, "ellipsis probability");
    gen->add_flag("--formulas", gen_opt.formulas, "generate formulas instead of terms");

    std::string raw_input;
    try {
        app.parse(argc, argv);
        if (*eval) {
            raw_input = eval_opt.input = input_or_stdin(eval_opt.input);
            return run_eval(eval_opt);
        }
        if (*subst) {
            raw_input = subst_opt.target_text = input_or_stdin(subst_opt.target_text);
            return run_subst(subst_opt);
        }
        if (*qelim) {
            raw_input = qelim_opt.input = input_or_stdin(qelim_opt.input);
            return run_qelim(qelim_opt);
        }
        if (*borel) return run_borel(borel_opt);
        if (*props) return run_props_cmd(props_opt);
        if (*gen) return run_gen(gen_opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const ParseError& e) {
        report_parse_error(raw_input, e);
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
