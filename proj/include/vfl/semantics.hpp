#pragma once

#include "vfl/errors.hpp"
#include "vfl/formula.hpp"
#include "vfl/nat.hpp"
#include "vfl/signature.hpp"
#include "vfl/term.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace vfl {

// Total map from variables to naturals: a finite table plus a default for
// every unmentioned variable.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::map<std::string, Nat> bindings, Nat default_value = 0);

    const Nat& get(const std::string& var) const;
    Assignment with(const std::string& var, Nat value) const;  // s(x|n)

    const std::map<std::string, Nat>& bindings() const { return bindings_; }
    const Nat& default_value() const { return default_; }

    // "x=3,y=5"; empty text is the all-default assignment.
    static Assignment parse(std::string_view text);
    std::string to_text() const;

  private:
    std::map<std::string, Nat> bindings_;
    Nat default_ = 0;
};

struct EvalBudget {
    std::uint64_t max_ellipsis_width = 65536;
    std::uint64_t max_total_steps = 10'000'000;
};

inline constexpr std::uint64_t kDefaultQuantifierCutoff = 64;

using FixedFn = std::function<Nat(const std::vector<Nat>&)>;
using VariadicFn = std::function<Nat(const std::vector<Nat>&)>;  // nonempty input
using NaryVariadicFn =
    std::function<Nat(const std::vector<Nat>& prefix, const std::vector<Nat>& tail)>;
using PredicateFn = std::function<bool(const std::vector<Nat>&)>;

// Stream of naturals a generalized variadic interpretation may probe
// lazily; probing beyond the width budget raises BudgetExceeded.
using StreamFn = std::function<Nat(const Nat&)>;
using GeneralizedVariadicFn = std::function<Nat(const StreamFn&, const Nat& bound)>;

// Structure with universe the naturals. Numerals always denote themselves;
// every declared symbol needs exactly one host-supplied total function.
// Host functions must be pure; models are immutable once populated and a
// single evaluation is sequential, but distinct evaluations may share one
// model across threads.
class Model {
  public:
    Model() = default;
    explicit Model(Signature sig);

    Model& interpret_fixed(const std::string& name, FixedFn fn);
    Model& interpret_variadic(const std::string& name, VariadicFn fn);
    Model& interpret_nary_variadic(const std::string& name, NaryVariadicFn fn);
    Model& interpret_predicate(const std::string& name, PredicateFn fn);
    Model& interpret_constant(const std::string& name, Nat value);

    // Declares that `name` is interpreted as the standard order test
    // (1 if m <= n else 0). Bounded-quantifier search is exact only when
    // the guard uses this symbol, so the claim is opt-in.
    Model& designate_leq(const std::string& name);

    const Signature& sig() const { return sig_; }
    const std::string& leq_symbol() const { return leq_symbol_; }

    const FixedFn& fixed(const std::string& name) const;            // throws EvalError
    const VariadicFn& variadic(const std::string& name) const;      // throws EvalError
    const NaryVariadicFn& nary_variadic(const std::string& name) const;
    const PredicateFn& predicate(const std::string& name) const;
    const Nat& constant(const std::string& name) const;

  private:
    Signature sig_;
    std::map<std::string, FixedFn> fixed_;
    std::map<std::string, VariadicFn> variadic_;
    std::map<std::string, NaryVariadicFn> nary_variadic_;
    std::map<std::string, PredicateFn> predicates_;
    std::map<std::string, Nat> constants_;
    std::string leq_symbol_;
};

// Variant structure interpreting each variadic symbol on (stream, bound)
// instead of a materialized argument list.
class GeneralizedModel {
  public:
    GeneralizedModel() = default;
    explicit GeneralizedModel(Signature sig);

    GeneralizedModel& interpret_fixed(const std::string& name, FixedFn fn);
    GeneralizedModel& interpret_variadic(const std::string& name, GeneralizedVariadicFn fn);
    GeneralizedModel& interpret_nary_variadic(const std::string& name, NaryVariadicFn fn);
    GeneralizedModel& interpret_constant(const std::string& name, Nat value);

    // The generalized structure a plain model induces:
    // G(stream, bound) = G(stream(0), ..., stream(bound)).
    static GeneralizedModel truncation_of(const Model& m);

    const Signature& sig() const { return sig_; }
    const FixedFn& fixed(const std::string& name) const;
    const GeneralizedVariadicFn& variadic(const std::string& name) const;
    const NaryVariadicFn& nary_variadic(const std::string& name) const;
    const Nat& constant(const std::string& name) const;

  private:
    Signature sig_;
    std::map<std::string, FixedFn> fixed_;
    std::map<std::string, GeneralizedVariadicFn> variadic_;
    std::map<std::string, NaryVariadicFn> nary_variadic_;
    std::map<std::string, Nat> constants_;
};

// The two term interpretations. They agree on every term (the interp-equiv
// property suite is the executable statement), but they unfold an ellipsis
// differently:
//   syntactic: evaluate the bound to w, substitute numerals 0..w into the
//     body, evaluate each resulting term under the same assignment;
//   semantic: evaluate the single body term under shifted assignments
//     s(x|0), ..., s(x|w).
// Both throw BudgetExceeded when an ellipsis widens past the budget or the
// cumulative step count runs out.
Nat interp_syntactic(const Term& t, const Model& m, const Assignment& s,
                     const EvalBudget& budget = {});
Nat interp_semantic(const Term& t, const Model& m, const Assignment& s,
                    const EvalBudget& budget = {});

enum class StreamMode { Syntactic, Semantic };

// Ellipsis terms hand the generalized interpretation a lazy stream
// k -> value-of-body-at-k plus the evaluated bound.
Nat interp_generalized(const Term& t, const GeneralizedModel& gm, const Assignment& s,
                       const EvalBudget& budget = {}, StreamMode mode = StreamMode::Semantic);

enum class Truth { False = 0, True = 1, Unknown = 2 };

std::string_view truth_name(Truth v);

// Three-valued satisfaction. Atoms compare interpretations (unknown when a
// host probe leaves its stored prefix); connectives are Kleene. A
// quantifier shaped exists x (x <= B & body) or forall x (x <= B -> body),
// with the model's designated order symbol and x not free in B, is decided
// exactly by exhausting 0..B. Any other quantifier searches 0..cutoff and
// reports a definite verdict only on a witness (exists) or counterexample
// (forall), otherwise unknown.
Truth satisfies(const Formula& f, const Model& m, const Assignment& s,
                const EvalBudget& budget = {},
                std::uint64_t quantifier_cutoff = kDefaultQuantifierCutoff);

// std_signature() interpreted the standard way: + addition, * product,
// d equality test, <= order test, G nonzero test, S summation.
Model std_model();

}  // namespace vfl
