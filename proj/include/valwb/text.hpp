#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "valwb/errors.hpp"
#include "valwb/poly.hpp"
#include "valwb/series.hpp"

namespace valwb {

/// Recursive-descent reader for polynomials in X over k((t)).
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*'|'/') power)*
///   power  := atom ['^' exp]
///   atom   := INT | 't' | 'X' | 'O(' 't' ['^' exp] ')' | '(' expr ')' | '[' expr ']'
///   exp    := ['-'] INT | '(' ['-'] INT ['/' INT] ')'
///
/// Division is allowed only by X-free expressions and goes through series
/// inversion at `work_prec`. Fractional exponents apply to t only.
class PolyParser {
public:
    PolyParser(std::string_view text, Field f, Rational work_prec)
        : s_(text), f_(f), work_prec_(std::move(work_prec)) {}

    PolyS parse() {
        PolyS out = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return out;
    }

private:
    PolyS expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        PolyS acc = term();
        if (neg) acc = PolyS(f_) - acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            PolyS rhs = term();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
    }

    PolyS term() {
        PolyS acc = power();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '*' && c != '/') return acc;
            std::size_t at = pos_;
            ++pos_;
            PolyS rhs = power();
            if (c == '*') {
                acc = acc * rhs;
            } else {
                if (rhs.degree() > 0) fail_at(at, "division by an expression involving X");
                if (rhs.is_zero()) fail_at(at, "division by zero");
                try {
                    acc = acc * PolyS::constant(rhs.coeff(0).invert(work_prec_));
                } catch (const Error& e) {
                    fail_at(at, e.what());
                }
            }
        }
    }

    PolyS power() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == 't') {
            ++pos_;
            Rational e = 1;
            if (accept('^')) e = exponent();
            return PolyS::constant(t_power(f_, e));
        }
        PolyS base = atom();
        if (accept('^')) {
            Rational e = exponent();
            if (e.get_den() != 1 || sgn(e) < 0) fail_at(at, "only t takes fractional or negative exponents");
            if (e > 100000) fail_at(at, "exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
        }
        return base;
    }

    PolyS atom() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = integer();
            return PolyS::constant(Series::constant(Scalar::from_integer(f_, n)));
        }
        if (c == 'X') {
            ++pos_;
            return PolyS::x(f_);
        }
        if (c == 'O') {
            ++pos_;
            expect('(');
            skip_ws();
            if (peek() != 't') fail("expected t inside O(...)");
            ++pos_;
            Rational e = 1;
            if (accept('^')) e = exponent();
            expect(')');
            return PolyS::constant(Series::unknown_zero(f_, e));
        }
        if (c == '(' || c == '[') {
            ++pos_;
            PolyS inner = expr();
            expect(c == '(' ? ')' : ']');
            return inner;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Rational exponent() {
        skip_ws();
        if (accept('(')) {
            bool neg = accept('-');
            Integer num = integer();
            Integer den = 1;
            if (accept('/')) den = integer();
            expect(')');
            if (den == 0) fail("zero denominator in exponent");
            Rational r(neg ? Integer(-num) : num, den);
            r.canonicalize();
            return r;
        }
        bool neg = accept('-');
        Integer n = integer();
        return Rational(neg ? Integer(-n) : n);
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, what);
    }

    std::string_view s_;
    Field f_;
    Rational work_prec_;
    std::size_t pos_ = 0;
};

inline PolyS parse_poly(std::string_view text, Field f, const Rational& work_prec = 64) {
    return PolyParser(text, f, work_prec).parse();
}

/// An X-free expression.
inline Series parse_series(std::string_view text, Field f, const Rational& work_prec = 64) {
    PolyS p = parse_poly(text, f, work_prec);
    if (p.degree() > 0) throw ParseError(1, 1, "expected an element of k((t)), found a polynomial in X");
    return p.is_zero() ? Series::zero(f) : p.coeff(0);
}

/// A polynomial with exact Laurent-polynomial coefficients, as an element of K[X].
inline PolyK parse_poly_k(std::string_view text, Field f) {
    PolyS p = parse_poly(text, f);
    auto k = exact_over_k(p);
    if (!k) throw ParseError(1, 1, "coefficients must be exact Laurent polynomials in t");
    return *k;
}

}  // namespace valwb
