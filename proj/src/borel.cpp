#include "vfl/borel.hpp"

#include "vfl/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vfl {

const std::vector<Nat>& IotaTable::at(const std::vector<Nat>& tuple) const {
    if (tuple.size() != arity)
        throw EvalError("iota probed with a tuple of size " + std::to_string(tuple.size()) +
                        ", arity is " + std::to_string(arity));
    auto it = entries.find(tuple);
    return it == entries.end() ? default_seq : it->second;
}

std::vector<std::string> IotaTable::validate() const {
    std::vector<std::string> violations;
    if (arity == 0) violations.push_back("arity must be at least 1");
    if (default_seq.empty()) violations.push_back("the default sequence must be nonempty");
    for (const auto& [tuple, seq] : entries) {
        if (tuple.size() != arity)
            violations.push_back("entry tuple of size " + std::to_string(tuple.size()) +
                                 " does not match arity " + std::to_string(arity));
        if (seq.empty()) violations.push_back("an entry maps to the empty sequence");
    }
    return violations;
}

namespace {

std::vector<Nat> parse_nat_list(std::istringstream& in, std::size_t lineno) {
    std::vector<Nat> out;
    std::string word;
    while (in >> word) {
        for (char c : word)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::runtime_error("iota line " + std::to_string(lineno) +
                                         ": expected a natural, got '" + word + "'");
        out.emplace_back(word);
    }
    return out;
}

}  // namespace

IotaTable IotaTable::from_stream(std::istream& in) {
    IotaTable table;
    table.arity = 0;  // inferred from the first tuple line
    bool have_default = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw std::runtime_error("iota line " + std::to_string(lineno) + ": missing '->'");
        std::string lhs = line.substr(0, arrow);
        std::istringstream rhs(line.substr(arrow + 2));
        std::vector<Nat> seq = parse_nat_list(rhs, lineno);
        if (seq.empty())
            throw std::runtime_error("iota line " + std::to_string(lineno) +
                                     ": the sequence must be nonempty");

        std::istringstream ls(lhs);
        std::string head;
        ls >> head;
        if (head == "default") {
            have_default = true;
            table.default_seq = std::move(seq);
            continue;
        }
        // `(a1,...,an)` with optional spaces
        std::string tuple_text;
        for (char c : lhs)
            if (!std::isspace(static_cast<unsigned char>(c))) tuple_text += c;
        if (tuple_text.size() < 2 || tuple_text.front() != '(' || tuple_text.back() != ')')
            throw std::runtime_error("iota line " + std::to_string(lineno) +
                                     ": expected `(a1,...,an) -> ...` or `default -> ...`");
        std::vector<Nat> tuple;
        std::string cell;
        for (std::size_t i = 1; i + 1 < tuple_text.size(); ++i) {
            if (tuple_text[i] == ',') {
                tuple.emplace_back(cell);
                cell.clear();
            } else if (std::isdigit(static_cast<unsigned char>(tuple_text[i]))) {
                cell += tuple_text[i];
            } else {
                throw std::runtime_error("iota line " + std::to_string(lineno) +
                                         ": tuples hold naturals separated by commas");
            }
        }
        if (cell.empty())
            throw std::runtime_error("iota line " + std::to_string(lineno) + ": empty tuple cell");
        tuple.emplace_back(cell);
        if (table.arity == 0) table.arity = tuple.size();
        table.entries[std::move(tuple)] = std::move(seq);
    }
    if (!have_default) throw std::runtime_error("iota table needs a `default -> ...` line");
    if (table.arity == 0) table.arity = 1;  // no tuple lines: caller may override
    auto violations = table.validate();
    if (!violations.empty()) throw std::runtime_error("iota table: " + violations.front());
    return table;
}

IotaTable IotaTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open iota file: " + path);
    return from_stream(in);
}

std::string IotaTable::to_text() const {
    std::ostringstream out;
    for (const auto& [tuple, seq] : entries) {
        out << "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i > 0) out << ",";
            out << to_decimal(tuple[i]);
        }
        out << ") ->";
        for (const auto& v : seq) out << " " << to_decimal(v);
        out << "\n";
    }
    out << "default ->";
    for (const auto& v : default_seq) out << " " << to_decimal(v);
    out << "\n";
    return out.str();
}

Signature borel_signature(std::size_t n) {
    if (n == 0) throw std::invalid_argument("the table arity must be at least 1");
    Signature sig;
    sig.fixed_fn("f", 1).fixed_fn("l", n).nary_by_variadic_fn("tau", n);
    return sig;
}

Model borel_model(const BorModel& bm) {
    if (bm.f_prefix.empty()) throw std::invalid_argument("the stored prefix must be nonempty");
    auto violations = bm.iota.validate();
    if (!violations.empty()) throw std::invalid_argument("iota table: " + violations.front());

    Model m(borel_signature(bm.iota.arity));
    std::vector<Nat> prefix = bm.f_prefix;
    IotaTable iota = bm.iota;
    m.interpret_fixed("f", [prefix](const std::vector<Nat>& args) -> Nat {
        auto idx = to_u64(args[0]);
        if (!idx || *idx >= prefix.size())
            throw OutOfPrefix("f(" + to_decimal(args[0]) + ") lies outside the stored prefix");
        return prefix[static_cast<std::size_t>(*idx)];
    });
    m.interpret_fixed("l", [iota](const std::vector<Nat>& args) -> Nat {
        return Nat(iota.at(args).size() - 1);
    });
    m.interpret_nary_variadic(
        "tau", [iota](const std::vector<Nat>& tuple, const std::vector<Nat>& tail) -> Nat {
            return Nat(iota.at(tuple) == tail ? 1 : 0);
        });
    return m;
}

Formula build_sentence(const IotaTable& iota, std::size_t n, SentenceKind kind) {
    if (n == 0) throw std::invalid_argument("the sentence rank must be at least 1");
    if (iota.arity != n)
        throw std::invalid_argument("sentence rank " + std::to_string(n) +
                                    " does not match the table arity " +
                                    std::to_string(iota.arity));

    std::vector<Term> tuple_vars;
    for (std::size_t i = 1; i <= n; ++i) tuple_vars.push_back(Term::var("x" + std::to_string(i)));

    Term inner = Term::nary_ellipsis("tau", tuple_vars, Term::app("f", {Term::var("z")}), "z",
                                     Term::app("l", tuple_vars));

    auto exists_at = [&](std::size_t i) {  // 1-indexed quantifier block
        bool odd = (i % 2) == 1;
        return kind == SentenceKind::Sigma ? odd : !odd;
    };
    // The matrix compares against 1 when the innermost block is existential
    // (a union of cylinders) and against 0 when it is universal (an
    // intersection of cylinder complements).
    Nat target = exists_at(n) ? 1 : 0;
    Formula f = Formula::eq(std::move(inner), Term::numeral(std::move(target)));
    for (std::size_t i = n; i >= 1; --i) {
        std::string var = "x" + std::to_string(i);
        f = exists_at(i) ? Formula::exists(var, std::move(f))
                         : Formula::forall(var, std::move(f));
    }
    return f;
}

Truth check_membership(const BorModel& bm, const Formula& f, std::uint64_t cutoff,
                       const EvalBudget& budget) {
    Model m = borel_model(bm);
    if (auto err = well_formedness_error(f, m.sig()))
        throw std::invalid_argument("formula does not fit the table's language: " + *err);
    return satisfies(f, m, Assignment{}, budget, cutoff);
}

}  // namespace vfl
