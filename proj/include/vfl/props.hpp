#pragma once

#include "vfl/term.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vfl {

// Randomized property suites, one per executable lemma/theorem statement.
enum class Suite {
    SubstLemma,    // r(x|t)^s == r^{s(x|t^s)} whenever t is substitutable
    FormulaSubst,  // same statement lifted to bounded-quantifier formulas
    InterpEquiv,   // syntactic and semantic interpretation agree
    Commute,       // r(x|t)(y|c) == r(y|c)(x|t) under the stated hypotheses
    QelimSound,    // characteristic terms track satisfaction on {0,1}
    Roundtrip,     // parse(print(ast)) == ast for terms and formulas
    BorelPrefix,   // definite membership verdicts survive prefix extension
};

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite suite);
const std::vector<Suite>& all_suites();

struct PropFailure {
    std::uint64_t case_index = 0;
    std::string description;  // minimized counterexample, printable
};

struct PropReport {
    Suite suite = Suite::InterpEquiv;
    std::uint64_t cases_requested = 0;
    std::uint64_t attempts = 0;       // instances generated
    std::uint64_t cases_checked = 0;  // instances whose preconditions held
    std::uint64_t skipped_indefinite = 0;  // three-valued comparisons that stayed unknown
    std::vector<PropFailure> failures;

    bool passed() const { return failures.empty(); }
    double precondition_rate() const {
        return attempts == 0 ? 0.0 : double(cases_checked) / double(attempts);
    }
    std::string render() const;  // deterministic line-oriented report
};

// Deterministic per (suite, cases, seed). Counterexamples are shrunk by
// replacing subterms with 0 and collapsing ellipses before reporting.
PropReport run_props(Suite suite, std::uint64_t cases, std::uint64_t seed);

// One step of structural shrinking: subterms, children zeroed out, and an
// ellipsis collapsed to a one-argument application of its symbol.
std::vector<Term> shrink_candidates(const Term& t);

// Greedy descent to a smallest variant on which still_fails stays true;
// candidates that throw are treated as not failing.
Term shrink_term(Term t, const std::function<bool(const Term&)>& still_fails);

}  // namespace vfl
