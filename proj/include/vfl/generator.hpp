#pragma once

#include "vfl/formula.hpp"
#include "vfl/nat.hpp"
#include "vfl/semantics.hpp"
#include "vfl/signature.hpp"
#include "vfl/term.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace vfl {

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::size_t max_depth = 4;
    std::uint64_t max_numeral = 8;
    std::vector<std::string> variable_pool = {"x", "y", "z", "w"};
    double ellipsis_probability = 0.25;
};

// Deterministic well-formed random terms/formulas over a validated
// signature. Ellipsis bounds are drawn shallow (depth <= 2, sums only) so
// evaluation stays far inside the default budgets, and branching is capped
// at 2, which bounds node count by 2^(max_depth+1).
class TermGenerator {
  public:
    TermGenerator(GeneratorConfig cfg, Signature sig);

    Term term();
    Term term_at_depth(std::size_t depth);
    // Leaf-biased terms for substitution instances; never mentions
    // variables in `avoid`.
    Term simple_term(const std::vector<std::string>& avoid = {});
    Term bound_term();

    Formula formula();
    // Bounded-quantifier fragment only; always classifies cleanly.
    Formula uqf_formula();

    std::string variable();
    Nat numeral_value();
    Assignment assignment(std::uint64_t max_value);

    std::mt19937_64& rng() { return rng_; }
    const GeneratorConfig& config() const { return cfg_; }

  private:
    Formula formula_at_depth(std::size_t depth);
    Formula uqf_at_depth(std::size_t depth);
    double chance();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

    GeneratorConfig cfg_;
    Signature sig_;
    std::mt19937_64 rng_;
    std::vector<std::pair<std::string, std::size_t>> fixed_;
    std::vector<std::string> variadic_;
    std::vector<std::pair<std::string, std::size_t>> nary_;
    std::vector<std::string> preds_;
};

// First draw of a fresh generator: same (cfg, sig) gives the same term.
Term gen_term(const GeneratorConfig& cfg, const Signature& sig);

}  // namespace vfl
