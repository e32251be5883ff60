#pragma once

#include "vfl/formula.hpp"
#include "vfl/nat.hpp"
#include "vfl/semantics.hpp"
#include "vfl/signature.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace vfl {

// Finite table standing in for a function from n-tuples to nonempty finite
// sequences: stored entries plus a default row for every other tuple. Only
// finitely many tuples are ever probed under a cutoff, so the table is as
// expressive as needed at desk scale.
struct IotaTable {
    std::size_t arity = 1;
    std::map<std::vector<Nat>, std::vector<Nat>> entries;
    std::vector<Nat> default_seq;

    const std::vector<Nat>& at(const std::vector<Nat>& tuple) const;
    std::vector<std::string> validate() const;  // arity and nonemptiness

    // Lines `(a1,...,an) -> b1 b2 ... bm` and one `default -> ...` line.
    static IotaTable from_stream(std::istream& in);
    static IotaTable from_file(const std::string& path);
    std::string to_text() const;
};

// A structure known only through a finite initial segment of its unary
// stream f. Probing f past the prefix signals OutOfPrefix rather than
// fabricating a value, which is what keeps definite verdicts sound for
// every infinite extension.
struct BorModel {
    std::vector<Nat> f_prefix;  // length >= 1
    IotaTable iota;
};

enum class SentenceKind { Sigma, Pi };

// Language of the membership sentences: unary f, n-ary l (sequence length
// minus one) and n-ary-by-variadic tau (sequence comparison test).
Signature borel_signature(std::size_t n);

// Interpretations over a stored prefix; l and tau come from the table.
Model borel_model(const BorModel& bm);

// Q1 x1 ... Qn xn. =(tau(x1,...,xn; f(z)(0) ...z f(z)(l(x1,...,xn))), c)
// with strictly alternating quantifiers (Sigma starts with exists, Pi with
// forall) and c = 1 when the innermost quantifier is exists, else 0.
// The result is a sentence: no free variables.
Formula build_sentence(const IotaTable& iota, std::size_t n, SentenceKind kind);

// Evaluates the sentence against the prefix; a definite verdict holds for
// every infinite extension of the prefix (prefix-soundness), and anything
// that would need data beyond the prefix comes back unknown.
Truth check_membership(const BorModel& bm, const Formula& f, std::uint64_t cutoff,
                       const EvalBudget& budget = {});

}  // namespace vfl
