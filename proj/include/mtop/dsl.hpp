#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mtop/errors.hpp"

// Surface language for mset / pair-set expressions. Operators: `|` union,
// `&` intersection, `\` difference, `~` global complement; tightest first
// ~, &, \, |, all binaries left-associative. `--` comments to end of line;
// a newline ends a statement.
namespace mtop::dsl {

struct Span {
    int line = 1;
    int col = 1;
};

class SyntaxError : public error {
public:
    SyntaxError(Span span, const std::string& got, std::vector<std::string> expected)
        : error(errc::syntax_error, render(span, got, expected)),
          span_(span),
          expected_(std::move(expected)) {}

    Span span() const { return span_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string render(Span s, const std::string& got,
                              const std::vector<std::string>& expected) {
        std::string msg = "syntax error at line " + std::to_string(s.line) + ", col " +
                          std::to_string(s.col) + ": got " + got;
        if (!expected.empty()) {
            msg += "; expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += expected.size() == 2 ? " or " : ", ";
                msg += expected[i];
            }
        }
        return msg;
    }

    Span span_;
    std::vector<std::string> expected_;
};

// Evaluation-time diagnostic carrying the source location.
class EvalError : public error {
public:
    EvalError(errc code, Span span, const std::string& msg)
        : error(code, "line " + std::to_string(span.line) + ", col " + std::to_string(span.col) +
                          ": " + msg),
          span_(span) {}
    Span span() const { return span_; }

private:
    Span span_;
};

enum class Tok {
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Slash,
    Pipe,
    Amp,
    Tilde,
    Backslash,
    Equal,
    Ident,
    Int,
    HashElements,
    HashOmega,
    Newline,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long long value = 0;  // Int payload
    Span span;
};

inline const char* token_name(Tok t) {
    switch (t) {
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Slash: return "'/'";
        case Tok::Pipe: return "'|'";
        case Tok::Amp: return "'&'";
        case Tok::Tilde: return "'~'";
        case Tok::Backslash: return "'\\'";
        case Tok::Equal: return "'='";
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::HashElements: return "'#elements'";
        case Tok::HashOmega: return "'#omega'";
        case Tok::Newline: return "end of statement";
        case Tok::End: return "end of input";
    }
    return "?";
}

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::string text, long long value, Span sp) {
        out.push_back(Token{kind, std::move(text), value, sp});
    };
    while (i < src.size()) {
        char c = src[i];
        Span sp{line, col};
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '\n') {
            if (!out.empty() && out.back().kind != Tok::Newline) push(Tok::Newline, "\n", 0, sp);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            while (i < src.size() && src[i] != '\n') ++i, ++col;
            continue;
        }
        auto single = [&](Tok kind) {
            push(kind, std::string(1, c), 0, sp);
            ++i;
            ++col;
        };
        switch (c) {
            case '{': single(Tok::LBrace); continue;
            case '}': single(Tok::RBrace); continue;
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            case ',': single(Tok::Comma); continue;
            case '/': single(Tok::Slash); continue;
            case '|': single(Tok::Pipe); continue;
            case '&': single(Tok::Amp); continue;
            case '~': single(Tok::Tilde); continue;
            case '\\': single(Tok::Backslash); continue;
            case '=': single(Tok::Equal); continue;
            default: break;
        }
        if (c == '#') {
            std::size_t j = i + 1;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string word(src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            if (word == "#elements") {
                push(Tok::HashElements, word, 0, sp);
            } else if (word == "#omega") {
                push(Tok::HashOmega, word, 0, sp);
            } else {
                throw SyntaxError(sp, "'" + word + "'", {"'#elements'", "'#omega'"});
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            std::string digits(src.substr(i, j - i));
            if (digits.size() > 9) throw SyntaxError(sp, "'" + digits + "'", {"a smaller integer"});
            push(Tok::Int, digits, std::stoll(digits), sp);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Tok::Ident, std::string(src.substr(i, j - i)), 0, sp);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        throw SyntaxError(sp, "'" + std::string(1, c) + "'", {"a token"});
    }
    out.push_back(Token{Tok::End, "", 0, Span{line, col}});
    return out;
}

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct MsetLit {
    std::vector<std::pair<long long, std::string>> items;  // count/element
};
struct PairLit {
    std::vector<std::pair<std::string, long long>> items;  // (element, k)
};
struct EmptyLit {};
struct Name {
    std::string id;
};
struct Unary {
    char op;  // '~'
    ExprPtr child;
};
struct Binary {
    char op;  // '|', '&', '\\'
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Call {
    std::string name;
    std::vector<ExprPtr> args;
};

struct Expr {
    Span span;
    std::variant<MsetLit, PairLit, EmptyLit, Name, Unary, Binary, Call> node;
};

struct DirectiveElements {
    std::vector<std::string> names;
};
struct DirectiveOmega {
    long long omega;
};
struct Assign {
    std::string name;
    ExprPtr value;
};
struct ExprStmt {
    ExprPtr value;
};

struct Stmt {
    Span span;
    std::variant<DirectiveElements, DirectiveOmega, Assign, ExprStmt> node;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::vector<Stmt> script() {
        std::vector<Stmt> out;
        skip_newlines();
        while (!at(Tok::End)) {
            out.push_back(stmt());
            if (!at(Tok::End)) expect(Tok::Newline, {"end of statement"});
            skip_newlines();
        }
        return out;
    }

    // single expression, for tests and the REPL
    ExprPtr expression_only() {
        skip_newlines();
        ExprPtr e = expr();
        skip_newlines();
        expect(Tok::End, {"end of input"});
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    bool at(Tok k) const { return peek().kind == k; }
    Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    void skip_newlines() {
        while (at(Tok::Newline)) ++pos_;
    }

    [[noreturn]] void unexpected(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End      ? "end of input"
                          : t.kind == Tok::Newline ? "end of line"
                                                   : "'" + t.text + "'";
        throw SyntaxError(t.span, got, std::move(expected));
    }

    Token expect(Tok k, std::vector<std::string> expected) {
        if (!at(k)) unexpected(std::move(expected));
        return take();
    }

    Stmt stmt() {
        const Token& t = peek();
        if (t.kind == Tok::HashElements) {
            Span sp = take().span;
            std::vector<std::string> names;
            names.push_back(expect(Tok::Ident, {"an element name"}).text);
            while (at(Tok::Comma)) {
                take();
                names.push_back(expect(Tok::Ident, {"an element name"}).text);
            }
            return Stmt{sp, DirectiveElements{std::move(names)}};
        }
        if (t.kind == Tok::HashOmega) {
            Span sp = take().span;
            Token n = expect(Tok::Int, {"an integer"});
            return Stmt{sp, DirectiveOmega{n.value}};
        }
        if (t.kind == Tok::Ident && peek(1).kind == Tok::Equal) {
            Token name = take();
            take();  // '='
            return Stmt{name.span, Assign{name.text, expr()}};
        }
        Span sp = t.span;
        return Stmt{sp, ExprStmt{expr()}};
    }

    ExprPtr expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_diff();
        while (at(Tok::Pipe)) {
            Span sp = take().span;
            lhs = std::make_shared<Expr>(Expr{sp, Binary{'|', lhs, parse_diff()}});
        }
        return lhs;
    }

    ExprPtr parse_diff() {
        ExprPtr lhs = parse_and();
        while (at(Tok::Backslash)) {
            Span sp = take().span;
            lhs = std::make_shared<Expr>(Expr{sp, Binary{'\\', lhs, parse_and()}});
        }
        return lhs;
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_unary();
        while (at(Tok::Amp)) {
            Span sp = take().span;
            lhs = std::make_shared<Expr>(Expr{sp, Binary{'&', lhs, parse_unary()}});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (at(Tok::Tilde)) {
            Span sp = take().span;
            return std::make_shared<Expr>(Expr{sp, Unary{'~', parse_unary()}});
        }
        return atom();
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LBrace: return braced_literal();
            case Tok::Ident: {
                Token name = take();
                if (at(Tok::LParen)) {
                    take();
                    std::vector<ExprPtr> args;
                    if (!at(Tok::RParen)) {
                        args.push_back(expr());
                        while (at(Tok::Comma)) {
                            take();
                            args.push_back(expr());
                        }
                    }
                    expect(Tok::RParen, {"')'", "','"});
                    return std::make_shared<Expr>(Expr{name.span, Call{name.text, std::move(args)}});
                }
                return std::make_shared<Expr>(Expr{name.span, Name{name.text}});
            }
            case Tok::LParen: {
                take();
                ExprPtr e = expr();
                expect(Tok::RParen, {"')'"});
                return e;
            }
            default: unexpected({"an expression"});
        }
    }

    ExprPtr braced_literal() {
        Token open = take();  // '{'
        if (at(Tok::RBrace)) {
            take();
            return std::make_shared<Expr>(Expr{open.span, EmptyLit{}});
        }
        if (at(Tok::LParen)) {
            PairLit lit;
            for (;;) {
                expect(Tok::LParen, {"'('"});
                Token e = expect(Tok::Ident, {"an element name"});
                expect(Tok::Comma, {"','"});
                Token k = expect(Tok::Int, {"an integer"});
                expect(Tok::RParen, {"')'"});
                lit.items.emplace_back(e.text, k.value);
                if (at(Tok::Comma)) {
                    take();
                    continue;
                }
                break;
            }
            expect(Tok::RBrace, {"'}'", "','"});
            return std::make_shared<Expr>(Expr{open.span, std::move(lit)});
        }
        if (at(Tok::Int)) {
            MsetLit lit;
            for (;;) {
                Token c = expect(Tok::Int, {"an integer"});
                expect(Tok::Slash, {"'/'"});
                Token e = expect(Tok::Ident, {"an element name"});
                lit.items.emplace_back(c.value, e.text);
                if (at(Tok::Comma)) {
                    take();
                    continue;
                }
                break;
            }
            expect(Tok::RBrace, {"'}'", "','"});
            return std::make_shared<Expr>(Expr{open.span, std::move(lit)});
        }
        unexpected({"'}'", "'('", "an integer"});
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline int precedence(char op) {
    switch (op) {
        case '|': return 1;
        case '\\': return 2;
        case '&': return 3;
        default: return 4;
    }
}

}  // namespace detail

inline std::vector<Stmt> parse(std::string_view source) {
    return detail::Parser(lex(source)).script();
}

inline ExprPtr parse_expression(std::string_view source) {
    return detail::Parser(lex(source)).expression_only();
}

// Canonical text of an expression; parses back to an equivalent tree.
inline std::string format(const Expr& e) {
    struct V {
        std::string operator()(const MsetLit& m) const {
            std::string out = "{";
            for (std::size_t i = 0; i < m.items.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(m.items[i].first) + "/" + m.items[i].second;
            }
            return out + "}";
        }
        std::string operator()(const PairLit& p) const {
            std::string out = "{";
            for (std::size_t i = 0; i < p.items.size(); ++i) {
                if (i) out += ',';
                out += "(" + p.items[i].first + "," + std::to_string(p.items[i].second) + ")";
            }
            return out + "}";
        }
        std::string operator()(const EmptyLit&) const { return "{}"; }
        std::string operator()(const Name& n) const { return n.id; }
        std::string operator()(const Unary& u) const {
            return "~" + wrap(*u.child, detail::precedence('~'), false);
        }
        std::string operator()(const Binary& b) const {
            int p = detail::precedence(b.op);
            return wrap(*b.lhs, p, false) + " " + b.op + " " + wrap(*b.rhs, p, true);
        }
        std::string operator()(const Call& c) const {
            std::string out = c.name + "(";
            for (std::size_t i = 0; i < c.args.size(); ++i) {
                if (i) out += ", ";
                out += format(*c.args[i]);
            }
            return out + ")";
        }
        static std::string wrap(const Expr& e, int parent_prec, bool right_side) {
            if (const auto* b = std::get_if<Binary>(&e.node)) {
                int p = detail::precedence(b->op);
                if (p < parent_prec || (p == parent_prec && right_side))
                    return "(" + format(e) + ")";
            }
            return format(e);
        }
    };
    return std::visit(V{}, e.node);
}

inline std::string format(const Stmt& s) {
    struct V {
        std::string operator()(const DirectiveElements& d) const {
            std::string out = "#elements ";
            for (std::size_t i = 0; i < d.names.size(); ++i) {
                if (i) out += ",";
                out += d.names[i];
            }
            return out;
        }
        std::string operator()(const DirectiveOmega& d) const {
            return "#omega " + std::to_string(d.omega);
        }
        std::string operator()(const Assign& a) const { return a.name + " = " + format(*a.value); }
        std::string operator()(const ExprStmt& e) const { return format(*e.value); }
    };
    return std::visit(V{}, s.node);
}

}  // namespace mtop::dsl
