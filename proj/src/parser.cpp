#include "vfl/parser.hpp"

#include <cctype>
#include <string>
#include <tuple>
#include <vector>

namespace vfl {

namespace {

enum class Tok {
    End,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semicolon,
    Dot,
    DotDot,
    EllipsisBinder,  // `...x`, text holds the binder
    Tilde,
    Amp,
    Pipe,
    Arrow,
    IffTok,
    EqTok,
    SymbolTok,  // operator-shaped symbol name: + - * / <=
    Ident,
    Num,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = src.size();
    auto push = [&](Tok kind, std::size_t begin, std::size_t end, std::string text = {}) {
        out.push_back(Token{kind, std::move(text), SourceSpan{begin, end}});
    };
    while (i < n) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            push(Tok::Num, start, i, std::string(src.substr(start, i - start)));
            continue;
        }
        if (is_ident_start(c)) {
            while (i < n && is_ident_char(src[i])) ++i;
            push(Tok::Ident, start, i, std::string(src.substr(start, i - start)));
            continue;
        }
        auto starts_with = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
        if (starts_with("...")) {
            i += 3;
            if (i >= n || !is_ident_start(src[i]))
                throw ParseError(ParseError::Code::MalformedEllipsis, SourceSpan{start, i},
                                 "ellipsis marker must carry a variable, as in ...x");
            std::size_t b = i;
            while (i < n && is_ident_char(src[i])) ++i;
            push(Tok::EllipsisBinder, start, i, std::string(src.substr(b, i - b)));
            continue;
        }
        if (starts_with("..")) {
            i += 2;
            push(Tok::DotDot, start, i);
            continue;
        }
        if (starts_with("<->")) {
            i += 3;
            push(Tok::IffTok, start, i);
            continue;
        }
        if (starts_with("<=")) {
            i += 2;
            push(Tok::SymbolTok, start, i, "<=");
            continue;
        }
        if (starts_with("->")) {
            i += 2;
            push(Tok::Arrow, start, i);
            continue;
        }
        switch (c) {
            case '(': push(Tok::LParen, start, ++i); continue;
            case ')': push(Tok::RParen, start, ++i); continue;
            case '{': push(Tok::LBrace, start, ++i); continue;
            case '}': push(Tok::RBrace, start, ++i); continue;
            case ',': push(Tok::Comma, start, ++i); continue;
            case ';': push(Tok::Semicolon, start, ++i); continue;
            case '.': push(Tok::Dot, start, ++i); continue;
            case '~': push(Tok::Tilde, start, ++i); continue;
            case '&': push(Tok::Amp, start, ++i); continue;
            case '|': push(Tok::Pipe, start, ++i); continue;
            case '=': push(Tok::EqTok, start, ++i); continue;
            case '+': push(Tok::SymbolTok, start, ++i, "+"); continue;
            case '-': push(Tok::SymbolTok, start, ++i, "-"); continue;
            case '*': push(Tok::SymbolTok, start, ++i, "*"); continue;
            case '/': push(Tok::SymbolTok, start, ++i, "/"); continue;
            default:
                throw ParseError(ParseError::Code::UnexpectedToken, SourceSpan{start, start + 1},
                                 std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back(Token{Tok::End, "", SourceSpan{n, n}});
    return out;
}

class Parser {
  public:
    Parser(std::string_view src, const Signature& sig) : tokens_(lex(src)), sig_(sig) {
        if (!sig.ok())
            throw std::invalid_argument("signature does not validate; fix it before parsing");
    }

    Term term_full() {
        Term t = term();
        expect_consumed(t);
        return t;
    }

    Formula formula_full() {
        Formula f = formula();
        if (peek().kind != Tok::End)
            throw err(ParseError::Code::UnexpectedToken, peek().span, "unexpected trailing input");
        return f;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    ParseError err(ParseError::Code code, SourceSpan span, const std::string& msg) const {
        return ParseError(code, span, msg);
    }

    const Token& expect(Tok kind, const char* what,
                        ParseError::Code code = ParseError::Code::UnexpectedToken) {
        const Token& t = peek();
        if (t.kind != kind) {
            if (t.kind == Tok::End)
                throw err(ParseError::Code::UnexpectedEnd, t.span,
                          std::string("expected ") + what + " but input ended");
            throw err(code, t.span, std::string("expected ") + what);
        }
        return advance();
    }

    void expect_consumed(const Term& t) {
        const Token& next = peek();
        if (next.kind == Tok::End) return;
        if (next.kind == Tok::LParen && std::holds_alternative<VarTerm>(t.node().v))
            throw err(ParseError::Code::UnknownSymbol, next.span,
                      "'" + std::get<VarTerm>(t.node().v).name +
                          "' is not a declared function symbol");
        throw err(ParseError::Code::UnexpectedToken, next.span, "unexpected trailing input");
    }

    bool is_symbol_token(const Token& t) const {
        return t.kind == Tok::Ident || t.kind == Tok::SymbolTok;
    }

    // ---- terms ----

    Term term() {
        const Token& t = peek();
        if (t.kind == Tok::Num) {
            advance();
            return Term::numeral(Nat(t.text));
        }
        if (is_symbol_token(t)) return symbol_headed_term();
        if (t.kind == Tok::End)
            throw err(ParseError::Code::UnexpectedEnd, t.span, "expected a term but input ended");
        throw err(ParseError::Code::UnexpectedToken, t.span, "expected a term");
    }

    Term symbol_headed_term() {
        const Token head = peek();
        const std::string& name = head.text;
        if (is_reserved_word(name))
            throw err(ParseError::Code::UnknownSymbol, head.span,
                      "'" + name + "' is a reserved word and cannot appear in a term");
        if (auto arity = sig_.fixed_arity(name)) {
            advance();
            expect(Tok::LParen, "'(' after a function symbol");
            std::vector<Term> args = argument_list();
            if (args.size() != *arity)
                throw err(ParseError::Code::ArityMismatch, head.span,
                          "'" + name + "' expects " + std::to_string(*arity) +
                              " arguments, got " + std::to_string(args.size()));
            return Term::app(name, std::move(args));
        }
        if (sig_.is_variadic(name)) {
            advance();
            if (peek().kind == Tok::LBrace) return range_sugar(name);
            expect(Tok::LParen, "'(' after a variadic symbol");
            return variadic_tail(name);
        }
        if (auto n = sig_.nary_prefix_arity(name)) {
            advance();
            expect(Tok::LParen, "'(' after an n-ary-by-variadic symbol");
            std::vector<Term> prefix;
            for (std::size_t i = 0; i < *n; ++i) {
                if (i > 0) expect(Tok::Comma, "',' between prefix arguments");
                prefix.push_back(term());
            }
            expect(Tok::Semicolon, "';' between the prefix and the ellipsis part");
            auto [body, binder, bound] = ellipsis_part();
            expect(Tok::RParen, "')' closing the application");
            return Term::nary_ellipsis(name, std::move(prefix), std::move(body),
                                       std::move(binder), std::move(bound));
        }
        if (sig_.is_named_constant(name)) {
            advance();
            return Term::constant(name);
        }
        if (sig_.predicate_arity(name))
            throw err(ParseError::Code::UnknownSymbol, head.span,
                      "'" + name + "' is a predicate symbol and cannot head a term");
        if (head.kind != Tok::Ident)
            throw err(ParseError::Code::UnknownSymbol, head.span,
                      "'" + name + "' is not declared in the signature");
        advance();
        return Term::var(name);
    }

    std::vector<Term> argument_list() {
        std::vector<Term> args;
        if (peek().kind == Tok::RParen) {
            advance();
            return args;
        }
        while (true) {
            args.push_back(term());
            const Token& next = peek();
            if (next.kind == Tok::Comma) {
                advance();
                continue;
            }
            if (next.kind == Tok::RParen) {
                advance();
                return args;
            }
            if (next.kind == Tok::LParen && std::holds_alternative<VarTerm>(args.back().node().v))
                throw err(ParseError::Code::UnknownSymbol, next.span,
                          "'" + std::get<VarTerm>(args.back().node().v).name +
                              "' is not a declared function symbol");
            throw err(ParseError::Code::UnexpectedToken, next.span,
                      "expected ',' or ')' in the argument list");
        }
    }

    // After `fn(`: either explicit arguments or the two-copy ellipsis form.
    Term variadic_tail(const std::string& fn) {
        Term first = term();
        const Token& next = peek();
        if (next.kind == Tok::Comma) {
            std::vector<Term> args{first};
            while (peek().kind == Tok::Comma) {
                advance();
                args.push_back(term());
            }
            expect(Tok::RParen, "')' closing the application");
            return Term::var_app(fn, std::move(args));
        }
        if (next.kind == Tok::RParen) {
            advance();
            return Term::var_app(fn, {first});
        }
        if (next.kind == Tok::LParen) {
            EllipsisRest rest = ellipsis_after_body_impl(first);
            expect(Tok::RParen, "')' closing the ellipsis term");
            return Term::ellipsis(fn, std::move(first), std::move(rest.binder),
                                  std::move(rest.bound));
        }
        if (next.kind == Tok::EllipsisBinder)
            throw err(ParseError::Code::MalformedEllipsis, next.span,
                      "the ellipsis body must be written applied to (0) first");
        throw err(ParseError::Code::UnexpectedToken, next.span,
                  "expected ',', ')', or an ellipsis continuation");
    }

    // Parses `(0) ...x u(v)` after the first body copy, checking the copies
    // match; returns binder and bound. `first` is the already-parsed copy.
    struct EllipsisRest {
        std::string binder;
        Term bound;
        SourceSpan copy_span;
    };

    EllipsisRest ellipsis_after_body_impl(const Term& first) {
        expect(Tok::LParen, "'(' of the (0) wrapper");
        const Token& zero = peek();
        if (zero.kind != Tok::Num || Nat(zero.text) != 0)
            throw err(ParseError::Code::MalformedEllipsis, zero.span,
                      "the first ellipsis copy must be applied to (0)");
        advance();
        expect(Tok::RParen, "')' of the (0) wrapper");
        const Token& marker = peek();
        if (marker.kind != Tok::EllipsisBinder)
            throw err(ParseError::Code::MalformedEllipsis, marker.span,
                      "expected an ellipsis marker like ...x");
        std::string binder = marker.text;
        if (!is_variable_name(binder, sig_))
            throw err(ParseError::Code::MalformedEllipsis, marker.span,
                      "ellipsis binder '" + binder + "' is not usable as a variable");
        advance();
        SourceSpan copy_span{peek().span.begin, peek().span.begin};
        Term second = term();
        copy_span.end = tokens_[pos_ - 1].span.end;
        expect(Tok::LParen, "'(' applying the body copy to the bound",
               ParseError::Code::MalformedEllipsis);
        Term bound = term();
        expect(Tok::RParen, "')' closing the bound");
        if (!(first == second))
            throw err(ParseError::Code::BodyCopiesDiffer, copy_span,
                      "the two written copies of the ellipsis body differ");
        return EllipsisRest{std::move(binder), std::move(bound), copy_span};
    }

    std::tuple<Term, std::string, Term> ellipsis_part() {
        Term first = term();
        EllipsisRest rest = ellipsis_after_body_impl(first);
        return {std::move(first), std::move(rest.binder), std::move(rest.bound)};
    }

    // `fn{x=0..v}(u)` input sugar; printed form is always the two-copy one.
    Term range_sugar(const std::string& fn) {
        expect(Tok::LBrace, "'{'");
        const Token& var = peek();
        if (var.kind != Tok::Ident || !is_variable_name(var.text, sig_))
            throw err(ParseError::Code::MalformedEllipsis, var.span,
                      "range binder must be a variable");
        std::string binder = var.text;
        advance();
        expect(Tok::EqTok, "'=' in the range");
        const Token& lo = peek();
        if (lo.kind != Tok::Num || Nat(lo.text) != 0)
            throw err(ParseError::Code::MalformedEllipsis, lo.span, "range lower bound must be 0");
        advance();
        expect(Tok::DotDot, "'..' in the range");
        Term bound = term();
        expect(Tok::RBrace, "'}' closing the range");
        expect(Tok::LParen, "'(' before the body");
        Term body = term();
        expect(Tok::RParen, "')' after the body");
        return Term::ellipsis(fn, std::move(body), std::move(binder), std::move(bound));
    }

    // ---- formulas ----

    Formula formula() { return iff_level(); }

    Formula iff_level() {
        Formula lhs = implies_level();
        if (peek().kind == Tok::IffTok) {
            advance();
            return Formula::iff(std::move(lhs), iff_level());
        }
        return lhs;
    }

    Formula implies_level() {
        Formula lhs = or_level();
        if (peek().kind == Tok::Arrow) {
            advance();
            return Formula::implies(std::move(lhs), implies_level());
        }
        return lhs;
    }

    Formula or_level() {
        Formula f = and_level();
        while (peek().kind == Tok::Pipe) {
            advance();
            f = Formula::disj(std::move(f), and_level());
        }
        return f;
    }

    Formula and_level() {
        Formula f = unary_level();
        while (peek().kind == Tok::Amp) {
            advance();
            f = Formula::conj(std::move(f), unary_level());
        }
        return f;
    }

    Formula unary_level() {
        const Token& t = peek();
        if (t.kind == Tok::Tilde) {
            advance();
            return Formula::negate(unary_level());
        }
        if (t.kind == Tok::Ident && is_reserved_word(t.text)) return quantified();
        return atom();
    }

    Formula quantified() {
        const Token quant = advance();
        const Token& var = peek();
        if (var.kind != Tok::Ident)
            throw err(ParseError::Code::BadQuantifier, var.span,
                      "expected a variable after '" + quant.text + "'");
        if (!is_variable_name(var.text, sig_))
            throw err(ParseError::Code::BadQuantifier, var.span,
                      "'" + var.text + "' is declared in the signature and cannot be quantified");
        std::string name = var.text;
        advance();
        expect(Tok::Dot, "'.' after the quantified variable", ParseError::Code::BadQuantifier);
        Formula body = formula();  // quantifier bodies extend maximally
        return quant.text == "forall" ? Formula::forall(std::move(name), std::move(body))
                                      : Formula::exists(std::move(name), std::move(body));
    }

    Formula atom() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            advance();
            Formula f = formula();
            expect(Tok::RParen, "')' closing the formula");
            return f;
        }
        if (t.kind == Tok::EqTok) {
            advance();
            expect(Tok::LParen, "'(' after '='");
            Term lhs = term();
            expect(Tok::Comma, "',' between the sides of '='");
            Term rhs = term();
            expect(Tok::RParen, "')' closing '='");
            return Formula::eq(std::move(lhs), std::move(rhs));
        }
        if (t.kind == Tok::Ident && sig_.predicate_arity(t.text)) {
            const Token head = advance();
            std::size_t arity = *sig_.predicate_arity(head.text);
            expect(Tok::LParen, "'(' after a predicate symbol");
            std::vector<Term> args = argument_list();
            if (args.size() != arity)
                throw err(ParseError::Code::ArityMismatch, head.span,
                          "'" + head.text + "' expects " + std::to_string(arity) +
                              " arguments, got " + std::to_string(args.size()));
            return Formula::pred(head.text, std::move(args));
        }
        Term lhs = term();
        const Token& next = peek();
        if (next.kind == Tok::EqTok) {
            advance();
            Term rhs = term();
            return Formula::eq(std::move(lhs), std::move(rhs));
        }
        if (next.kind == Tok::SymbolTok && next.text == "<=") {
            if (sig_.fixed_arity("<=") != std::size_t{2})
                throw err(ParseError::Code::UnknownSymbol, next.span,
                          "'<=' sugar needs the binary function symbol '<=' declared");
            advance();
            Term rhs = term();
            return Formula::eq(Term::app("<=", {std::move(lhs), std::move(rhs)}),
                               Term::numeral(std::uint64_t{1}));
        }
        if (next.kind == Tok::LParen && std::holds_alternative<VarTerm>(lhs.node().v))
            throw err(ParseError::Code::UnknownSymbol, next.span,
                      "'" + std::get<VarTerm>(lhs.node().v).name +
                          "' is not a declared function symbol");
        throw err(ParseError::Code::UnexpectedToken, next.span,
                  "expected '=' or '<=' after a term");
    }

    std::vector<Token> tokens_;
    const Signature& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view src, const Signature& sig) {
    return Parser(src, sig).term_full();
}

Formula parse_formula(std::string_view src, const Signature& sig) {
    return Parser(src, sig).formula_full();
}

}  // namespace vfl
