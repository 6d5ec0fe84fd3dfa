#include "gma/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gma {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

const std::set<std::string> kKeywords = {"vars", "der", "action", "map",
                                         "inverse", "expr", "cmd"};
const std::set<std::string> kVerbs = {"exp",       "detect", "extract", "slice",
                                      "conjugate", "verify", "weight",  "isslice"};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (text[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += k;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n')
                advance(1);
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({Token::Kind::Int, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Kind::Punct, "->", tl, tc});
            advance(2);
            continue;
        }
        static const std::string singles = "(){};,+-*/^";
        if (singles.find(c) != std::string::npos) {
            out.push_back({Token::Kind::Punct, std::string(1, c), tl, tc});
            advance(1);
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", tl, tc);
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw parse_error("syntax error: " + msg + ", got " + got, t.line, t.col);
    }

    bool accept_punct(const std::string& p) {
        if (peek().kind == Token::Kind::Punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_punct(const std::string& p) {
        if (!accept_punct(p))
            fail("expected '" + p + "'");
    }

    bool accept_ident(const std::string& word) {
        if (peek().kind == Token::Kind::Ident && peek().text == word) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string expect_ident(const char* what) {
        if (peek().kind != Token::Kind::Ident)
            fail(std::string("expected ") + what);
        return next().text;
    }

    std::string expect_name(const char* what) {
        const Token& t = peek();
        std::string name = expect_ident(what);
        if (kKeywords.count(name))
            throw parse_error("reserved word '" + name + "' cannot be used as a name", t.line,
                              t.col);
        return name;
    }

    BigInt expect_int() {
        if (peek().kind != Token::Kind::Int)
            fail("expected an integer");
        return BigInt(next().text);
    }

    // ---- expression grammar ----
    RatFunc parse_expr(const ContextPtr& ctx) {
        RatFunc acc = parse_term(ctx);
        while (true) {
            if (accept_punct("+"))
                acc = acc + parse_term(ctx);
            else if (accept_punct("-"))
                acc = acc - parse_term(ctx);
            else
                return acc;
        }
    }

private:
    RatFunc parse_term(const ContextPtr& ctx) {
        RatFunc acc = parse_unary(ctx);
        while (true) {
            if (accept_punct("*")) {
                acc = acc * parse_unary(ctx);
            } else if (accept_punct("/")) {
                const Token& t = peek();
                RatFunc rhs = parse_unary(ctx);
                if (rhs.is_zero())
                    throw parse_error("division by zero", t.line, t.col);
                acc = acc / rhs;
            } else {
                return acc;
            }
        }
    }

    RatFunc parse_unary(const ContextPtr& ctx) {
        if (accept_punct("-"))
            return -parse_unary(ctx);
        return parse_power(ctx);
    }

    RatFunc parse_power(const ContextPtr& ctx) {
        RatFunc base = parse_atom(ctx);
        if (!accept_punct("^"))
            return base;
        const Token& t = peek();
        long long e = parse_exponent();
        if (base.is_zero() && e < 0)
            throw parse_error("zero raised to a negative power", t.line, t.col);
        return base.pow(e);
    }

    long long parse_exponent() {
        bool neg = false;
        bool paren = accept_punct("(");
        if (accept_punct("-"))
            neg = true;
        BigInt v = expect_int();
        if (paren)
            expect_punct(")");
        if (v > BigInt(1000000))
            fail("exponent too large");
        long long e = v.convert_to<long long>();
        return neg ? -e : e;
    }

    RatFunc parse_atom(const ContextPtr& ctx) {
        const Token& t = peek();
        if (t.kind == Token::Kind::Int) {
            return RatFunc::constant(ctx, BigRational(BigInt(next().text)));
        }
        if (t.kind == Token::Kind::Ident) {
            auto idx = ctx->index_of(t.text);
            if (!idx)
                throw parse_error("unknown variable '" + t.text + "'", t.line, t.col);
            ++pos_;
            return RatFunc::variable(ctx, *idx);
        }
        if (accept_punct("(")) {
            RatFunc inner = parse_expr(ctx);
            expect_punct(")");
            return inner;
        }
        fail("expected an expression");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;

public:
    // ---- session grammar ----
    Session parse_session_body() {
        Session s;
        if (!accept_ident("vars"))
            fail("expected 'vars'");
        std::vector<std::string> names;
        names.push_back(expect_name("a variable name"));
        while (accept_punct(","))
            names.push_back(expect_name("a variable name"));
        expect_punct(";");
        const Token& ctx_tok = peek();
        try {
            s.base = make_context(names);
            s.ext = extend_context(s.base, "t");
        } catch (const context_error& e) {
            throw parse_error(e.what(), ctx_tok.line, ctx_tok.col);
        }

        std::set<std::string> used;
        auto claim = [&](const std::string& name, const Token& at) {
            if (!used.insert(name).second)
                throw parse_error("duplicate definition of '" + name + "'", at.line, at.col);
            if (s.base->index_of(name) || name == "t")
                throw parse_error("'" + name + "' is already a variable", at.line, at.col);
        };

        while (peek().kind == Token::Kind::Ident && !accept_ident("cmd")) {
            const Token& at = peek();
            if (accept_ident("der")) {
                std::string name = expect_name("a derivation name");
                claim(name, at);
                s.derivations.emplace(name, Derivation(s.base, parse_block(s.base, s.base)));
            } else if (accept_ident("action")) {
                std::string name = expect_name("an action name");
                claim(name, at);
                s.action_images.emplace(name, parse_block(s.base, s.ext));
            } else if (accept_ident("map")) {
                std::string name = expect_name("a map name");
                claim(name, at);
                std::vector<RatFunc> fwd = parse_block(s.base, s.base);
                if (!accept_ident("inverse"))
                    fail("expected 'inverse'");
                std::vector<RatFunc> inv = parse_block(s.base, s.base);
                try {
                    s.maps.emplace(name, BirationalMap(s.base, std::move(fwd), std::move(inv)));
                } catch (const map_error& e) {
                    throw parse_error("map '" + name + "': " + e.what(), at.line, at.col);
                }
            } else if (accept_ident("expr")) {
                std::string name = expect_name("an expression name");
                claim(name, at);
                expect_punct("{");
                RatFunc value = parse_expr(s.base);
                expect_punct("}");
                s.exprs.emplace(name, std::move(value));
            } else {
                fail("expected a definition ('der', 'action', 'map', 'expr') or 'cmd'");
            }
        }
        // 'cmd' already consumed by the loop condition when we reach here
        const Token& vt = peek();
        std::string verb = expect_ident("a command verb");
        if (!kVerbs.count(verb))
            throw parse_error("unknown verb '" + verb + "'", vt.line, vt.col);
        s.command.verb = verb;
        while (peek().kind == Token::Kind::Ident && peek().text != "order" &&
               peek().text != "dmax")
            s.command.args.push_back(next().text);
        while (!at_end()) {
            if (accept_punct("-")) {
                expect_punct("-");
            }
            const Token& ft = peek();
            std::string flag = expect_ident("a flag name ('order' or 'dmax')");
            if (flag == "order")
                s.command.order = static_cast<int>(expect_int().convert_to<long long>());
            else if (flag == "dmax")
                s.command.dmax = static_cast<int>(expect_int().convert_to<long long>());
            else
                throw parse_error("unknown flag '" + flag + "'", ft.line, ft.col);
        }
        return s;
    }

    // { x -> expr; y -> expr; ... } with exactly one image per key variable;
    // the right-hand sides are parsed over `values` (base + t for actions).
    std::vector<RatFunc> parse_block(const ContextPtr& keys, const ContextPtr& values) {
        expect_punct("{");
        std::vector<RatFunc> images(keys->size(), RatFunc::zero(values));
        std::vector<bool> seen(keys->size(), false);
        while (!accept_punct("}")) {
            const Token& vt = peek();
            std::string var = expect_ident("a variable name");
            auto idx = keys->index_of(var);
            if (!idx)
                throw parse_error("unknown variable '" + var + "'", vt.line, vt.col);
            if (seen[*idx])
                throw parse_error("duplicate image for '" + var + "'", vt.line, vt.col);
            expect_punct("->");
            images[*idx] = parse_expr(values);
            seen[*idx] = true;
            expect_punct(";");
        }
        for (std::size_t i = 0; i < keys->size(); ++i)
            if (!seen[i])
                fail("missing image for variable '" + keys->name(i) + "'");
        return images;
    }
};

} // namespace

RatFunc parse_ratfunc(const std::string& text, const ContextPtr& ctx) {
    Parser p(text);
    RatFunc r = p.parse_expr(ctx);
    if (!p.at_end())
        p.fail("expected end of expression");
    return r;
}

Session parse_session(const std::string& text) {
    Parser p(text);
    Session s = p.parse_session_body();
    if (!p.at_end())
        p.fail("expected end of session");
    return s;
}

} // namespace gma
