#include "superstructure/expr.hpp"

#include <cctype>

namespace superstructure {

namespace {

struct Token {
    enum class Kind { Num, Ident, Sym, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

struct Lexer {
    std::string src;
    std::size_t at = 0;

    Token next() {
        while (at < src.size() && std::isspace((unsigned char)src[at])) ++at;
        if (at >= src.size()) return {Token::Kind::End, "", at};
        std::size_t start = at;
        char c = src[at];
        if (std::isdigit((unsigned char)c)) {
            while (at < src.size() && std::isdigit((unsigned char)src[at])) ++at;
            return {Token::Kind::Num, src.substr(start, at - start), start};
        }
        if (std::isalpha((unsigned char)c)) {
            while (at < src.size() &&
                   (std::isalnum((unsigned char)src[at])))
                ++at;
            return {Token::Kind::Ident, src.substr(start, at - start), start};
        }
        ++at;
        return {Token::Kind::Sym, std::string(1, c), start};
    }
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

struct Parser {
    Lexer lex;
    Token cur;
    const EvalContext& ctx;

    Parser(const std::string& text, const EvalContext& c) : lex{text}, ctx(c) { cur = lex.next(); }

    void advance() { cur = lex.next(); }
    bool is_sym(const char* s) const { return cur.kind == Token::Kind::Sym && cur.text == s; }
    void expect_sym(const char* s) {
        if (!is_sym(s)) fail(cur.pos, std::string("expected '") + s + "'");
        advance();
    }

    EvalValue parse() {
        EvalValue v = expr();
        if (cur.kind != Token::Kind::End) fail(cur.pos, "trailing input '" + cur.text + "'");
        return v;
    }

    EvalValue expr() {
        bool neg = false;
        if (is_sym("-")) { neg = true; advance(); }
        else if (is_sym("+")) advance();
        EvalValue v = term();
        if (neg) v = negate(v);
        while (is_sym("+") || is_sym("-")) {
            bool minus = cur.text == "-";
            advance();
            EvalValue rhs = term();
            v = add(v, minus ? negate(rhs) : rhs, cur.pos);
        }
        return v;
    }

    // term := factor ('.' factor)* with an optional scalar prefix like 2 or 1/2
    EvalValue term() {
        EvalValue v = factor();
        while (is_sym(".")) {
            advance();
            EvalValue rhs = factor();
            v = mul(v, rhs, cur.pos);
        }
        return v;
    }

    EvalValue factor() {
        if (cur.kind == Token::Kind::Num) {
            long num = std::stol(cur.text);
            advance();
            long den = 1;
            if (is_sym("/")) {
                advance();
                if (cur.kind != Token::Kind::Num) fail(cur.pos, "expected denominator");
                den = std::stol(cur.text);
                advance();
            }
            EvalValue v;
            v.kind = EvalValue::Kind::Scalar;
            v.scalar = Rational(num, den);
            return v;
        }
        if (is_sym("(")) {
            advance();
            EvalValue v = expr();
            expect_sym(")");
            return v;
        }
        if (is_sym("[")) {
            advance();
            EvalValue a = expr();
            expect_sym(",");
            EvalValue b = expr();
            expect_sym("]");
            return bracket_values(a, b, cur.pos);
        }
        if (cur.kind == Token::Kind::Ident) return ident();
        fail(cur.pos, "unexpected '" + cur.text + "'");
    }

    EvalValue ident() {
        std::string name = cur.text;
        std::size_t pos = cur.pos;
        if (name == "div" || name == "ham" || name == "pb") {
            advance();
            expect_sym("(");
            EvalValue a = expr();
            if (name == "pb") {
                expect_sym(",");
                EvalValue b = expr();
                expect_sym(")");
                return poisson_values(a, b, pos);
            }
            expect_sym(")");
            if (name == "div") {
                if (a.kind != EvalValue::Kind::Field) fail(pos, "div() expects a vector field");
                EvalValue v;
                v.fn = divergence(a.field);
                v.kind = EvalValue::Kind::Function;
                return v;
            }
            if (!ctx.h_type) fail(pos, "ham() needs an h-series ambient (--series h)");
            if (a.kind == EvalValue::Kind::Scalar) {
                a.fn = SuperPoly<Rational>::monomial(0, a.scalar);
                a.kind = EvalValue::Kind::Function;
            }
            if (a.kind != EvalValue::Kind::Function) fail(pos, "ham() expects a generating function");
            EvalValue v;
            v.field = hamiltonian(ctx.split, a.fn);
            v.kind = EvalValue::Kind::Field;
            return v;
        }
        // generator or direction atom
        if (name.size() >= 2 && (std::isdigit((unsigned char)name[1]))) {
            char kind = name[0];
            int idx = std::stoi(name.substr(1));
            advance();
            if (kind == 'd') {
                if (idx < 1 || idx > ctx.n) fail(pos, "direction out of range");
                EvalValue v;
                v.field = field_monomial<Rational>(ctx.n, 0, idx - 1, Rational(1));
                v.kind = EvalValue::Kind::Field;
                return v;
            }
            int g = -1;
            if (!ctx.h_type) {
                if (kind == 'x' && idx <= ctx.n) g = idx - 1;
            } else {
                if (kind == 'x' && idx <= ctx.split.pairs) g = idx - 1;
                if (kind == 'e' && idx <= ctx.split.pairs) g = ctx.split.pairs + idx - 1;
                if (kind == 'z' && idx <= ctx.split.zetas) g = 2 * ctx.split.pairs + idx - 1;
            }
            if (g < 0) fail(pos, "unknown generator '" + name + "' in this ambient");
            EvalValue v;
            v.fn = SuperPoly<Rational>::monomial(Mono(1) << g, Rational(1));
            v.kind = EvalValue::Kind::Function;
            return v;
        }
        fail(pos, "unknown identifier '" + name + "'");
    }

    static EvalValue negate(EvalValue v) {
        switch (v.kind) {
            case EvalValue::Kind::Scalar: v.scalar = -v.scalar; break;
            case EvalValue::Kind::Function: v.fn = -v.fn; break;
            case EvalValue::Kind::Field: v.field = -v.field; break;
        }
        return v;
    }

    EvalValue add(EvalValue a, EvalValue b, std::size_t pos) {
        // scalars join functions as constant terms
        auto promote = [&](EvalValue& v) {
            if (v.kind == EvalValue::Kind::Scalar) {
                v.fn = SuperPoly<Rational>::monomial(0, v.scalar);
                v.kind = EvalValue::Kind::Function;
            }
        };
        if (a.kind == EvalValue::Kind::Scalar && b.kind == EvalValue::Kind::Scalar) {
            a.scalar += b.scalar;
            return a;
        }
        if (a.kind == EvalValue::Kind::Field || b.kind == EvalValue::Kind::Field) {
            if (a.kind != b.kind) fail(pos, "cannot add a vector field to a function");
            if (a.field.n == 0) a.field = VectorField<Rational>(ctx.n);
            if (b.field.n == 0) b.field = VectorField<Rational>(ctx.n);
            a.field += b.field;
            return a;
        }
        promote(a);
        promote(b);
        a.fn += b.fn;
        return a;
    }

    EvalValue mul(EvalValue a, EvalValue b, std::size_t pos) {
        if (a.kind == EvalValue::Kind::Field) fail(pos, "a vector field can only appear as the last factor");
        if (a.kind == EvalValue::Kind::Scalar) {
            switch (b.kind) {
                case EvalValue::Kind::Scalar: b.scalar = a.scalar * b.scalar; break;
                case EvalValue::Kind::Function: b.fn = a.scalar * b.fn; break;
                case EvalValue::Kind::Field: b.field = a.scalar * b.field; break;
            }
            return b;
        }
        // function times ...
        if (b.kind == EvalValue::Kind::Scalar) {
            a.fn = b.scalar * a.fn;
            return a;
        }
        if (b.kind == EvalValue::Kind::Function) {
            a.fn = a.fn * b.fn;
            return a;
        }
        b.field = a.fn * b.field;
        return b;
    }

    EvalValue bracket_values(EvalValue a, EvalValue b, std::size_t pos) {
        if (a.kind == EvalValue::Kind::Field && b.kind == EvalValue::Kind::Field) {
            if (a.field.n == 0) a.field = VectorField<Rational>(ctx.n);
            if (b.field.n == 0) b.field = VectorField<Rational>(ctx.n);
            EvalValue v;
            v.field = bracket(a.field, b.field);
            v.kind = EvalValue::Kind::Field;
            return v;
        }
        fail(pos, "[ , ] brackets vector fields; use pb(f, g) for generating functions");
    }

    EvalValue poisson_values(EvalValue a, EvalValue b, std::size_t pos) {
        if (!ctx.h_type) fail(pos, "pb() needs an h-series ambient (--series h)");
        auto promote = [&](EvalValue& v) {
            if (v.kind == EvalValue::Kind::Scalar) {
                v.fn = SuperPoly<Rational>::monomial(0, v.scalar);
                v.kind = EvalValue::Kind::Function;
            }
            if (v.kind != EvalValue::Kind::Function) fail(pos, "pb() expects generating functions");
        };
        promote(a);
        promote(b);
        EvalValue v;
        v.fn = poisson(ctx.split, a.fn, b.fn);
        v.kind = EvalValue::Kind::Function;
        return v;
    }
};

}  // namespace

EvalContext infer_context(const std::string& text, std::optional<Series> series, std::optional<int> n) {
    bool h_type = series ? is_h_type(*series) : false;
    // scan generators to size the ambient when n is not given
    int max_x = 0, max_e = 0, max_z = 0, max_d = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        char c = text[i];
        if ((c == 'x' || c == 'e' || c == 'z' || c == 'd') && std::isdigit((unsigned char)text[i + 1]) &&
            (i == 0 || !std::isalnum((unsigned char)text[i - 1]))) {
            int idx = std::atoi(text.c_str() + i + 1);
            if (c == 'x') max_x = std::max(max_x, idx);
            if (c == 'e') max_e = std::max(max_e, idx);
            if (c == 'z') max_z = std::max(max_z, idx);
            if (c == 'd') max_d = std::max(max_d, idx);
        }
    }
    if (!series && (max_e || max_z)) h_type = true;
    EvalContext ctx;
    ctx.h_type = h_type;
    if (h_type) {
        int pairs = std::max(max_x, max_e), zetas = max_z;
        if (n) {
            if (*n < 2 * pairs + zetas)
                throw std::invalid_argument("--n is too small for the generators in the expression");
            pairs = *n / 2;
            zetas = *n % 2;
            if (max_z > zetas) { pairs = (*n - max_z) / 2; zetas = *n - 2 * pairs; }
        }
        ctx.split = HSplit{pairs, zetas};
        ctx.n = ctx.split.n();
    } else {
        ctx.n = n ? *n : std::max({max_x, max_d, 1});
        if (ctx.n < std::max(max_x, max_d))
            throw std::invalid_argument("--n is too small for the generators in the expression");
    }
    if (ctx.n < 1 || ctx.n > kMaxVars) throw std::invalid_argument("ambient size out of range");
    return ctx;
}

EvalValue eval_expression(const std::string& text, const EvalContext& ctx) {
    Parser p(text, ctx);
    return p.parse();
}

std::string value_str(const EvalContext& ctx, const EvalValue& v) {
    switch (v.kind) {
        case EvalValue::Kind::Scalar: return v.scalar.str();
        case EvalValue::Kind::Function: return poly_str(ctx.coords(), v.fn);
        default: return vf_str(ctx.coords(), v.field);
    }
}

}  // namespace superstructure
