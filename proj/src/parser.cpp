#include "ellcorr/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ellcorr {

namespace {

enum class Tok { Num, Imag, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Lexer {
    std::string_view text;
    size_t pos = 0;
    Tok kind = Tok::End;
    double value = 0;
    size_t tok_pos = 0;

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        tok_pos = pos;
        if (pos >= text.size()) {
            kind = Tok::End;
            return;
        }
        char c = text[pos];
        switch (c) {
        case '+': kind = Tok::Plus; ++pos; return;
        case '-': kind = Tok::Minus; ++pos; return;
        case '*': kind = Tok::Star; ++pos; return;
        case '/': kind = Tok::Slash; ++pos; return;
        case '^': kind = Tok::Caret; ++pos; return;
        case '(': kind = Tok::LParen; ++pos; return;
        case ')': kind = Tok::RParen; ++pos; return;
        default: break;
        }
        if (c == 'u') {
            kind = Tok::Var;
            ++pos;
            return;
        }
        if (c == 'i') {
            kind = Tok::Imag;
            value = 1.0;
            ++pos;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0;
            auto res = std::from_chars(text.data() + pos, text.data() + text.size(), v);
            if (res.ec != std::errc{})
                throw ParseError(pos, "number");
            pos = static_cast<size_t>(res.ptr - text.data());
            if (pos < text.size() && text[pos] == 'i') {
                kind = Tok::Imag;
                ++pos;
            } else {
                kind = Tok::Num;
            }
            value = v;
            return;
        }
        throw ParseError(pos, "number, 'i', 'u', '(', or operator");
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(std::string_view text) {
        lex.text = text;
        lex.advance();
    }

    RationalFn parse() {
        RationalFn r = expr();
        if (lex.kind != Tok::End)
            throw ParseError(lex.tok_pos, "end of input or operator");
        return r;
    }

    RationalFn expr() {
        RationalFn acc = term();
        while (lex.kind == Tok::Plus || lex.kind == Tok::Minus) {
            bool minus = lex.kind == Tok::Minus;
            lex.advance();
            RationalFn rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    RationalFn term() {
        RationalFn acc = factor();
        while (lex.kind == Tok::Star || lex.kind == Tok::Slash) {
            bool div = lex.kind == Tok::Slash;
            lex.advance();
            RationalFn rhs = factor();
            if (div && rhs.is_zero())
                throw Error("division by zero in expression");
            acc = div ? acc / rhs : acc * rhs;
        }
        return acc;
    }

    RationalFn factor() {
        int sign = 1;
        while (lex.kind == Tok::Plus || lex.kind == Tok::Minus) {
            if (lex.kind == Tok::Minus)
                sign = -sign;
            lex.advance();
        }
        RationalFn base = power();
        return sign < 0 ? RationalFn::constant(Cx(-1)) * base : base;
    }

    RationalFn power() {
        RationalFn base = atom();
        if (lex.kind != Tok::Caret)
            return base;
        lex.advance();
        size_t at = lex.tok_pos;
        RationalFn e = atom();
        if (!e.is_constant())
            throw NonRational(at);
        Cx ev = e.eval(Cx(0, 0));
        double n = ev.real();
        if (std::abs(ev.imag()) > 1e-9 || n < -1e-9 || std::abs(n - std::round(n)) > 1e-9)
            throw NonRational(at);
        return base.pow(static_cast<int>(std::lround(n)));
    }

    RationalFn atom() {
        switch (lex.kind) {
        case Tok::Num: {
            double v = lex.value;
            lex.advance();
            return RationalFn::constant(Cx(v, 0));
        }
        case Tok::Imag: {
            double v = lex.value;
            lex.advance();
            return RationalFn::constant(Cx(0, v));
        }
        case Tok::Var:
            lex.advance();
            return RationalFn::variable();
        case Tok::LParen: {
            lex.advance();
            RationalFn r = expr();
            if (lex.kind != Tok::RParen)
                throw ParseError(lex.tok_pos, "')'");
            lex.advance();
            return r;
        }
        default:
            throw ParseError(lex.tok_pos, "number, 'i', 'u', or '('");
        }
    }
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_one(Cx v) { return v == Cx(1, 0); }

std::string fmt_poly(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Cx c = p.coeff(k);
        if (c == Cx(0))
            continue;
        bool lead = out.empty();
        bool negated = false;
        if (c.imag() == 0 && c.real() < 0) {
            c = -c;
            negated = true;
        }
        if (!lead)
            out += negated ? " - " : " + ";
        else if (negated)
            out += "-";
        std::string var = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
        if (var.empty())
            out += format_complex(c);
        else if (is_one(c))
            out += var;
        else
            out += format_complex(c) + "*" + var;
    }
    return out;
}

} // namespace

RationalFn parse_rational(std::string_view text) { return Parser(text).parse(); }

Cx parse_complex(std::string_view text) {
    RationalFn r = Parser(text).parse();
    if (!r.is_constant())
        throw ParseError(0, "constant expression");
    return r.eval(Cx(0, 0));
}

std::string format_complex(Cx v) {
    if (v.imag() == 0)
        return fmt_double(v.real());
    std::string im = fmt_double(v.imag()) + "i";
    if (v.real() == 0)
        return im;
    std::string out = "(" + fmt_double(v.real());
    out += v.imag() < 0 ? " - " + fmt_double(-v.imag()) + "i" : " + " + im;
    return out + ")";
}

std::string format_rational(const RationalFn& r) {
    if (r.is_zero())
        return "0";
    if (r.is_constant())
        return format_complex(r.scale());
    std::string out;
    if (!is_one(r.scale()))
        out += format_complex(r.scale()) + "*";
    out += "(" + fmt_poly(r.num()) + ")";
    if (r.den().degree() > 0)
        out += "/(" + fmt_poly(r.den()) + ")";
    return out;
}

} // namespace ellcorr
