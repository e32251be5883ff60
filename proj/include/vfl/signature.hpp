#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vfl {

enum class SymbolKind {
    FixedFn,          // fixed arity >= 1
    VariadicFn,       // applies to any nonempty finite sequence
    NaryByVariadicFn, // fixed prefix of n arguments plus a variadic tail
    Predicate,
    NamedConstant,
};

std::string_view symbol_kind_name(SymbolKind kind);

struct SymbolDecl {
    SymbolKind kind;
    std::string name;
    std::size_t arity = 0;  // FixedFn/Predicate arity; NaryByVariadicFn prefix length

    friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

// Symbol registry of a variadic language. Declarations are recorded as
// given; validate() reports every clash instead of rejecting eagerly, so a
// signature assembled from several sources can be diagnosed in one pass.
// Numerals are implicit (digit runs always lex as constants) and variables
// are any identifier not declared here. Immutable after validation by
// convention; safe to share across threads.
class Signature {
  public:
    Signature& fixed_fn(std::string name, std::size_t arity);
    Signature& variadic_fn(std::string name);
    Signature& nary_by_variadic_fn(std::string name, std::size_t prefix_arity);
    Signature& predicate(std::string name, std::size_t arity);
    Signature& named_constant(std::string name);

    // Empty result means the unique-readability hypotheses hold: every name
    // is lexable and in exactly one class, and no name carries two arities.
    std::vector<std::string> validate() const;
    bool ok() const { return validate().empty(); }

    // Lookups. On signatures with clashes the first declaration wins.
    std::optional<std::size_t> fixed_arity(std::string_view name) const;
    bool is_variadic(std::string_view name) const;
    std::optional<std::size_t> nary_prefix_arity(std::string_view name) const;
    std::optional<std::size_t> predicate_arity(std::string_view name) const;
    bool is_named_constant(std::string_view name) const;
    bool declares(std::string_view name) const;

    const std::vector<SymbolDecl>& decls() const { return decls_; }

    // One declaration per line: `fn <name> <arity>`, `variadic <name>`,
    // `naryvariadic <name> <n>`, `pred <name> <arity>`, `const <name>`.
    // Blank lines and lines starting with '#' are skipped.
    static Signature from_stream(std::istream& in);
    static Signature from_file(const std::string& path);
    std::string to_text() const;

    friend bool operator==(const Signature&, const Signature&) = default;

  private:
    std::vector<SymbolDecl> decls_;
};

// Digit runs are implicit numeral constants in every signature.
bool is_numeral_name(std::string_view name);

// Identifier-shaped and not claimed by quantifier keywords.
bool is_lexable_identifier(std::string_view name);

// Names the lexer can produce as a single symbol token.
bool is_lexable_symbol_name(std::string_view name);

bool is_reserved_word(std::string_view name);

// A variable is any lexable identifier the signature does not declare.
bool is_variable_name(std::string_view name, const Signature& sig);

// The signature of the standard model: binary +, *, d (equality test),
// <= (order test); variadic G (nonzero test) and S (summation).
Signature std_signature();

}  // namespace vfl
