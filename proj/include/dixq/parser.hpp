#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "fields.hpp"

namespace dixq {

// Abstract syntax for parameter expressions over n, c1, c2 and rational
// literals with + - * / ^ and parentheses.
struct ParamExpr {
    enum class Kind { Number, VarN, VarC1, VarC2, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind;
    Rational value;          // Number
    long exponent = 0;       // Pow
    std::unique_ptr<ParamExpr> lhs, rhs;
    size_t offset = 0; // byte offset in the source, for diagnostics
};

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

namespace parse_detail {

struct Parser {
    const std::string& src;
    size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    std::unique_ptr<ParamExpr> make(ParamExpr::Kind k, size_t off) {
        auto e = std::make_unique<ParamExpr>();
        e->kind = k;
        e->offset = off;
        return e;
    }

    std::unique_ptr<ParamExpr> expr() {
        auto lhs = term();
        for (;;) {
            skip_ws();
            size_t off = pos;
            if (accept('+')) {
                auto e = make(ParamExpr::Kind::Add, off);
                e->lhs = std::move(lhs);
                e->rhs = term();
                lhs = std::move(e);
            } else if (accept('-')) {
                auto e = make(ParamExpr::Kind::Sub, off);
                e->lhs = std::move(lhs);
                e->rhs = term();
                lhs = std::move(e);
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<ParamExpr> term() {
        auto lhs = factor();
        for (;;) {
            skip_ws();
            size_t off = pos;
            if (accept('*')) {
                auto e = make(ParamExpr::Kind::Mul, off);
                e->lhs = std::move(lhs);
                e->rhs = factor();
                lhs = std::move(e);
            } else if (accept('/')) {
                auto e = make(ParamExpr::Kind::Div, off);
                e->lhs = std::move(lhs);
                e->rhs = factor();
                lhs = std::move(e);
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<ParamExpr> factor() {
        skip_ws();
        size_t off = pos;
        if (accept('-')) {
            auto e = make(ParamExpr::Kind::Neg, off);
            e->lhs = factor();
            return e;
        }
        if (accept('+')) return factor();
        auto base = primary();
        skip_ws();
        if (accept('^')) {
            auto e = make(ParamExpr::Kind::Pow, pos - 1);
            e->lhs = std::move(base);
            e->exponent = integer_exponent();
            return e;
        }
        return base;
    }

    long integer_exponent() {
        skip_ws();
        size_t off = pos;
        bool neg = false;
        bool paren = accept('(');
        skip_ws();
        if (accept('-')) neg = true;
        skip_ws();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            throw ParseError("expected integer exponent", pos);
        long v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            if (v > 1000) throw ParseError("exponent too large", off);
            ++pos;
        }
        if (paren && !accept(')')) throw ParseError("expected ')'", pos);
        return neg ? -v : v;
    }

    std::unique_ptr<ParamExpr> primary() {
        skip_ws();
        size_t off = pos;
        if (accept('(')) {
            auto e = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos);
            return e;
        }
        if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            std::string digits;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                digits.push_back(src[pos++]);
            auto e = make(ParamExpr::Kind::Number, off);
            e->value = Rational(digits);
            return e;
        }
        if (src.compare(pos, 2, "c1") == 0) {
            pos += 2;
            return make(ParamExpr::Kind::VarC1, off);
        }
        if (src.compare(pos, 2, "c2") == 0) {
            pos += 2;
            return make(ParamExpr::Kind::VarC2, off);
        }
        if (pos < src.size() && src[pos] == 'n') {
            ++pos;
            return make(ParamExpr::Kind::VarN, off);
        }
        throw ParseError("expected number, 'n', 'c1', 'c2' or '('", pos);
    }
};

} // namespace parse_detail

inline std::unique_ptr<ParamExpr> parse_param_expr(const std::string& src) {
    parse_detail::Parser p(src);
    auto e = p.expr();
    p.skip_ws();
    if (p.pos != src.size()) throw ParseError("unexpected trailing input", p.pos);
    return e;
}

// Evaluate an expression into a rational function of n over K, with the
// given values for c1 and c2 (symbolic generators or specialized scalars).
template <class K>
RatFunc<K> eval_param_expr(const ParamExpr& e, const K& c1, const K& c2) {
    using Kn = RatFunc<K>;
    switch (e.kind) {
    case ParamExpr::Kind::Number: return Kn(from_rational<K>(e.value));
    case ParamExpr::Kind::VarN: return Kn::variable();
    case ParamExpr::Kind::VarC1: return Kn(c1);
    case ParamExpr::Kind::VarC2: return Kn(c2);
    case ParamExpr::Kind::Add: return eval_param_expr(*e.lhs, c1, c2) + eval_param_expr(*e.rhs, c1, c2);
    case ParamExpr::Kind::Sub: return eval_param_expr(*e.lhs, c1, c2) - eval_param_expr(*e.rhs, c1, c2);
    case ParamExpr::Kind::Mul: return eval_param_expr(*e.lhs, c1, c2) * eval_param_expr(*e.rhs, c1, c2);
    case ParamExpr::Kind::Neg: return -eval_param_expr(*e.lhs, c1, c2);
    case ParamExpr::Kind::Div: {
        Kn d = eval_param_expr(*e.rhs, c1, c2);
        if (d.is_zero()) throw ParseError("division by an identically zero expression", e.offset);
        return eval_param_expr(*e.lhs, c1, c2) / d;
    }
    case ParamExpr::Kind::Pow: {
        Kn b = eval_param_expr(*e.lhs, c1, c2);
        if (b.is_zero() && e.exponent < 0)
            throw ParseError("zero raised to a negative power", e.offset);
        return b.pow(e.exponent);
    }
    }
    throw std::logic_error("unreachable");
}

template <class K>
RatFunc<K> parse_ratfunc_n(const std::string& src, const K& c1, const K& c2) {
    auto ast = parse_param_expr(src);
    return eval_param_expr(*ast, c1, c2);
}

} // namespace dixq
