#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valwb/errors.hpp"
#include "valwb/series.hpp"

namespace valwb {

/// Dense polynomial in t over k; coefficient i belongs to t^i.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(Field f) : field_(f) {}
    TPoly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

    static TPoly constant(const Scalar& s) { return TPoly(s.field(), {s}); }
    static TPoly monomial(const Scalar& s, long degree) {
        std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar::zero(s.field()));
        c.back() = s;
        return TPoly(s.field(), std::move(c));
    }

    Field field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(long i) const {
        return i >= 0 && i < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(i)]
                                                          : Scalar::zero(field_);
    }
    Scalar leading() const { return c_.empty() ? Scalar::zero(field_) : c_.back(); }

    /// Order of vanishing at t = 0.
    long order() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<long>(i);
        throw DomainError("order of the zero polynomial");
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return TPoly(a.field_, std::move(c));
    }
    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return TPoly(a.field_);
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return TPoly(a.field_, std::move(c));
    }
    TPoly scaled(const Scalar& s) const {
        TPoly r = *this;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    /// Euclidean division; returns {quotient, remainder}.
    static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
        if (b.is_zero()) throw DomainError("division by zero polynomial");
        TPoly rem = a;
        std::vector<Scalar> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0,
                              Scalar::zero(a.field_));
        Scalar inv = b.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            long shift = rem.degree() - b.degree();
            Scalar factor = rem.leading() * inv;
            q[static_cast<std::size_t>(shift)] = factor;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem.c_[j + static_cast<std::size_t>(shift)] -= factor * b.c_[j];
            rem.trim();
        }
        return {TPoly(a.field_, std::move(q)), rem};
    }

    static TPoly gcd(TPoly a, TPoly b) {
        while (!b.is_zero()) {
            TPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.scaled(a.leading().inverse());
    }

    Series to_series() const {
        std::vector<std::pair<Rational, Scalar>> t;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) t.emplace_back(Rational(static_cast<long>(i)), c_[i]);
        return Series::from_terms(field_, t);
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    std::string str() const { return to_series().str(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field field_{};
    std::vector<Scalar> c_;
};

/// Element of K = k(t): num/den in lowest terms with den monic.
class RatFunc {
public:
    RatFunc() = default;

    static RatFunc zero(Field f) { return RatFunc(TPoly(f), TPoly::constant(Scalar::one(f)), true); }
    static RatFunc integer(Field f, long n) {
        return RatFunc(TPoly::constant(Scalar::from_integer(f, n)), TPoly::constant(Scalar::one(f)), true);
    }
    static RatFunc constant(const Scalar& s) {
        return RatFunc(TPoly::constant(s), TPoly::constant(Scalar::one(s.field())), true);
    }
    static RatFunc from_poly(TPoly p) {
        Field f = p.field();
        return RatFunc(std::move(p), TPoly::constant(Scalar::one(f)), true);
    }
    static RatFunc fraction(TPoly num, TPoly den) { return RatFunc(std::move(num), std::move(den), false); }

    /// Exact conversion of a series with ram 1 and finite support; nullopt otherwise.
    static std::optional<RatFunc> from_series(const Series& s) {
        if (!s.is_exact() || s.ram() != 1) return std::nullopt;
        Field f = s.field();
        if (s.is_exact_zero()) return zero(f);
        long lo = s.terms().begin()->first;
        long shift = lo < 0 ? -lo : 0;
        std::vector<Scalar> c(static_cast<std::size_t>(s.terms().rbegin()->first + shift + 1), Scalar::zero(f));
        for (const auto& [k, x] : s.terms()) c[static_cast<std::size_t>(k + shift)] = x;
        TPoly num(f, std::move(c));
        if (shift == 0) return from_poly(std::move(num));
        return fraction(std::move(num), TPoly::monomial(Scalar::one(f), shift));
    }

    Field field() const { return num_.field(); }
    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_exact_zero() const { return is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Exact t-adic valuation.
    GroupVal val() const {
        if (is_zero()) return GroupVal::inf();
        return GroupVal::fin(num_.order() - den_.order());
    }
    ValueBound val_bound() const { return ValueBound::exactly(val()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, false);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, false);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_, false);
    }
    RatFunc inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFunc(den_, num_, false);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc scaled(const Scalar& s) const { return RatFunc(num_.scaled(s), den_, false); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    RatFunc(TPoly num, TPoly den, bool reduced) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = TPoly::constant(Scalar::one(num_.field()));
            return;
        }
        if (!reduced) {
            TPoly g = TPoly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = TPoly::divmod(num_, g).first;
                den_ = TPoly::divmod(den_, g).first;
            }
        }
        Scalar lc = den_.leading();
        if (!lc.is_one()) {
            Scalar inv = lc.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    TPoly num_;
    TPoly den_;
};

/// Expansion of r in k((t)) to absolute precision `prec`. Polynomials and
/// t-power denominators expand exactly; other denominators are inverted.
inline Series coerce(const RatFunc& r, const Rational& prec) {
    Field f = r.field();
    if (r.is_zero()) return Series::zero(f);
    Series num = r.num().to_series();
    const TPoly& den = r.den();
    long dv = den.order();
    if (den.degree() == dv) {
        // den = c * t^dv
        return num.scaled(den.leading().inverse()).shifted(make_rational(-dv));
    }
    // den = t^dv * u with u(0) != 0; 1/u is needed to relative precision
    // prec - (vnum - dv).
    std::vector<Scalar> uc(den.coeffs().begin() + dv, den.coeffs().end());
    Series u = TPoly(f, std::move(uc)).to_series();
    Rational v_num = num.val().rational();
    Rational rel = prec - v_num + dv;
    Series inv = u.invert(rel);
    return (num * inv).shifted(make_rational(-dv)).with_prec(GroupVal::fin(prec));
}

/// The residue of a series of non-negative valuation: its constant coefficient.
inline Scalar residue(const Series& s) {
    if (!s.is_unknown_zero() && !s.is_exact_zero()) {
        if (s.val() < GroupVal::fin(0)) throw NegativeValuation("residue of " + s.str());
    } else if (s.is_unknown_zero() && s.prec() <= GroupVal::fin(0)) {
        throw PrecisionExhausted("residue of " + s.str());
    }
    if (s.is_exact_zero()) return Scalar::zero(s.field());
    return s.coeff(Rational(0));
}

/// Polynomial sum_{n < cutoff} c_n t^n. Requires ram 1 and support >= 0.
inline RatFunc truncate_to_ratfunc(const Series& s, const Rational& cutoff) {
    Field f = s.field();
    if (s.ram() != 1) throw RamifiedInput("ramification index " + std::to_string(s.ram()));
    if (GroupVal::fin(cutoff) > s.prec())
        throw PrecisionExhausted("cutoff " + cutoff.get_str() + " exceeds O(t^" + s.prec().str() + ")");
    if (s.has_support() && s.terms().begin()->first < 0)
        throw NegativeSupport("series " + s.str() + " has negative exponents");
    std::vector<Scalar> c;
    for (const auto& [k, x] : s.terms()) {
        if (Rational(k) >= cutoff) break;
        if (c.size() <= static_cast<std::size_t>(k)) c.resize(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
        c[static_cast<std::size_t>(k)] = x;
    }
    return RatFunc::from_poly(TPoly(f, std::move(c)));
}

/// Laurent truncation: like truncate_to_ratfunc but negative exponents are
/// allowed (the result gets a t-power denominator).
inline RatFunc truncate_laurent(const Series& s, const Rational& cutoff) {
    if (!s.has_support() || s.terms().begin()->first >= 0) return truncate_to_ratfunc(s, cutoff);
    if (s.ram() != 1) throw RamifiedInput("ramification index " + std::to_string(s.ram()));
    long shift = -s.terms().begin()->first;
    RatFunc shifted = truncate_to_ratfunc(s.shifted(Rational(shift)), cutoff + shift);
    return shifted / RatFunc::from_poly(TPoly::monomial(Scalar::one(s.field()), shift));
}

}  // namespace valwb
