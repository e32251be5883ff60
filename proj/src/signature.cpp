#include "vfl/signature.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vfl {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Operator-shaped names the lexer recognizes as single symbol tokens.
const std::set<std::string, std::less<>>& operator_names() {
    static const std::set<std::string, std::less<>> names = {"+", "-", "*", "/", "<="};
    return names;
}

}  // namespace

std::string_view symbol_kind_name(SymbolKind kind) {
    switch (kind) {
        case SymbolKind::FixedFn: return "function";
        case SymbolKind::VariadicFn: return "variadic function";
        case SymbolKind::NaryByVariadicFn: return "n-ary-by-variadic function";
        case SymbolKind::Predicate: return "predicate";
        case SymbolKind::NamedConstant: return "constant";
    }
    return "?";
}

bool is_numeral_name(std::string_view name) {
    if (name.empty()) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_reserved_word(std::string_view name) { return name == "forall" || name == "exists"; }

bool is_lexable_identifier(std::string_view name) {
    if (name.empty() || !is_ident_start(name[0])) return false;
    if (!std::all_of(name.begin(), name.end(), is_ident_char)) return false;
    return !is_reserved_word(name);
}

bool is_lexable_symbol_name(std::string_view name) {
    return is_lexable_identifier(name) || operator_names().count(name) > 0;
}

bool is_variable_name(std::string_view name, const Signature& sig) {
    return is_lexable_identifier(name) && !sig.declares(name);
}

Signature& Signature::fixed_fn(std::string name, std::size_t arity) {
    decls_.push_back({SymbolKind::FixedFn, std::move(name), arity});
    return *this;
}

Signature& Signature::variadic_fn(std::string name) {
    decls_.push_back({SymbolKind::VariadicFn, std::move(name), 0});
    return *this;
}

Signature& Signature::nary_by_variadic_fn(std::string name, std::size_t prefix_arity) {
    decls_.push_back({SymbolKind::NaryByVariadicFn, std::move(name), prefix_arity});
    return *this;
}

Signature& Signature::predicate(std::string name, std::size_t arity) {
    decls_.push_back({SymbolKind::Predicate, std::move(name), arity});
    return *this;
}

Signature& Signature::named_constant(std::string name) {
    decls_.push_back({SymbolKind::NamedConstant, std::move(name), 0});
    return *this;
}

std::vector<std::string> Signature::validate() const {
    // Grouping by name makes the outcome independent of declaration order.
    std::map<std::string, std::vector<const SymbolDecl*>> by_name;
    for (const auto& d : decls_) by_name[d.name].push_back(&d);

    std::vector<std::string> violations;
    for (const auto& [name, ds] : by_name) {
        if (is_numeral_name(name)) {
            violations.push_back(name + " collides with the implicit numerals");
            continue;
        }
        if (is_reserved_word(name)) {
            violations.push_back(name + " is a reserved word");
            continue;
        }
        if (!is_lexable_symbol_name(name)) {
            violations.push_back(name + " is not a lexable symbol name");
            continue;
        }

        std::set<SymbolKind> kinds;
        for (const auto* d : ds) kinds.insert(d->kind);
        if (kinds.size() > 1) {
            // Report each pair once, in enum order.
            std::vector<SymbolKind> ks(kinds.begin(), kinds.end());
            for (std::size_t i = 0; i < ks.size(); ++i)
                for (std::size_t j = i + 1; j < ks.size(); ++j)
                    violations.push_back(name + " is both " + std::string(symbol_kind_name(ks[i])) +
                                         " and " + std::string(symbol_kind_name(ks[j])));
        }
        for (SymbolKind k : kinds) {
            if (k != SymbolKind::FixedFn && k != SymbolKind::Predicate &&
                k != SymbolKind::NaryByVariadicFn)
                continue;
            std::set<std::size_t> arities;
            for (const auto* d : ds)
                if (d->kind == k) arities.insert(d->arity);
            if (arities.size() > 1) {
                std::string msg = name + " has arities";
                for (std::size_t a : arities) msg += " " + std::to_string(a);
                violations.push_back(msg);
            }
            if (k != SymbolKind::NaryByVariadicFn && arities.count(0))
                violations.push_back(name + " declared with arity 0");
        }
    }
    return violations;
}

std::optional<std::size_t> Signature::fixed_arity(std::string_view name) const {
    for (const auto& d : decls_)
        if (d.kind == SymbolKind::FixedFn && d.name == name) return d.arity;
    return std::nullopt;
}

bool Signature::is_variadic(std::string_view name) const {
    for (const auto& d : decls_)
        if (d.kind == SymbolKind::VariadicFn && d.name == name) return true;
    return false;
}

std::optional<std::size_t> Signature::nary_prefix_arity(std::string_view name) const {
    for (const auto& d : decls_)
        if (d.kind == SymbolKind::NaryByVariadicFn && d.name == name) return d.arity;
    return std::nullopt;
}

std::optional<std::size_t> Signature::predicate_arity(std::string_view name) const {
    for (const auto& d : decls_)
        if (d.kind == SymbolKind::Predicate && d.name == name) return d.arity;
    return std::nullopt;
}

bool Signature::is_named_constant(std::string_view name) const {
    for (const auto& d : decls_)
        if (d.kind == SymbolKind::NamedConstant && d.name == name) return true;
    return false;
}

bool Signature::declares(std::string_view name) const {
    for (const auto& d : decls_)
        if (d.name == name) return true;
    return false;
}

Signature Signature::from_stream(std::istream& in) {
    Signature sig;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        auto need_name = [&]() {
            std::string name;
            if (!(ls >> name))
                throw std::runtime_error("signature line " + std::to_string(lineno) +
                                         ": missing symbol name");
            return name;
        };
        auto need_arity = [&]() {
            long long a = -1;
            if (!(ls >> a) || a < 0)
                throw std::runtime_error("signature line " + std::to_string(lineno) +
                                         ": missing or negative arity");
            return static_cast<std::size_t>(a);
        };
        if (kind == "fn") {
            std::string name = need_name();
            sig.fixed_fn(name, need_arity());
        } else if (kind == "variadic") {
            sig.variadic_fn(need_name());
        } else if (kind == "naryvariadic") {
            std::string name = need_name();
            sig.nary_by_variadic_fn(name, need_arity());
        } else if (kind == "pred") {
            std::string name = need_name();
            sig.predicate(name, need_arity());
        } else if (kind == "const") {
            sig.named_constant(need_name());
        } else {
            throw std::runtime_error("signature line " + std::to_string(lineno) +
                                     ": unknown declaration '" + kind + "'");
        }
    }
    return sig;
}

Signature Signature::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open signature file: " + path);
    return from_stream(in);
}

std::string Signature::to_text() const {
    std::ostringstream out;
    for (const auto& d : decls_) {
        switch (d.kind) {
            case SymbolKind::FixedFn:
                out << "fn " << d.name << " " << d.arity << "\n";
                break;
            case SymbolKind::VariadicFn:
                out << "variadic " << d.name << "\n";
                break;
            case SymbolKind::NaryByVariadicFn:
                out << "naryvariadic " << d.name << " " << d.arity << "\n";
                break;
            case SymbolKind::Predicate:
                out << "pred " << d.name << " " << d.arity << "\n";
                break;
            case SymbolKind::NamedConstant:
                out << "const " << d.name << "\n";
                break;
        }
    }
    return out.str();
}

Signature std_signature() {
    Signature sig;
    sig.fixed_fn("+", 2)
        .fixed_fn("*", 2)
        .fixed_fn("d", 2)
        .fixed_fn("<=", 2)
        .variadic_fn("G")
        .variadic_fn("S");
    return sig;
}

}  // namespace vfl
