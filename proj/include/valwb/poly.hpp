#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valwb/errors.hpp"
#include "valwb/ratfunc.hpp"
#include "valwb/series.hpp"

namespace valwb {

/// What a coefficient domain for polynomials in X must provide. Both the
/// exact field K = k(t) (RatFunc) and the precision-tracked completion
/// (Series) model it.
template <typename C>
concept Coefficient = requires(const C& a, const C& b, const Scalar& s, Field f) {
    { C::zero(f) } -> std::same_as<C>;
    { C::constant(s) } -> std::same_as<C>;
    { a.field() } -> std::same_as<Field>;
    { a.is_exact_zero() } -> std::same_as<bool>;
    { a.val_bound() } -> std::same_as<ValueBound>;
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a * b } -> std::same_as<C>;
    { -a } -> std::same_as<C>;
    { a.scaled(s) } -> std::same_as<C>;
};

/// Polynomial sum c_i X^i with coefficients in C.
///
/// Exact-zero leading coefficients are trimmed. A Series leading coefficient
/// that is only zero-to-precision is kept (arithmetic can produce it), but
/// operations that depend on the true degree reject it.
template <Coefficient C>
class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : field_(f) {}
    Poly(Field f, std::vector<C> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

    static Poly constant(C c) {
        Field f = c.field();
        return Poly(f, {std::move(c)});
    }
    static Poly x(Field f) { return Poly(f, {C::zero(f), C::constant(Scalar::one(f))}); }
    /// X - a.
    static Poly linear(const C& a) {
        Field f = a.field();
        return Poly(f, {-a, C::constant(Scalar::one(f))});
    }

    Field field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const { return c_; }
    const C& coeff(long i) const { return c_.at(static_cast<std::size_t>(i)); }
    C coeff_or_zero(long i) const {
        return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : C::zero(field_);
    }
    const C& leading() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of 0");
        return c_.back();
    }

    /// The leading coefficient is decidably nonzero.
    bool has_decided_degree() const {
        if (c_.empty()) return true;
        ValueBound b = c_.back().val_bound();
        return b.exact;
    }

    void require_decided_degree(const char* where) const {
        if (!has_decided_degree())
            throw PrecisionExhausted(std::string(where) + ": leading coefficient undecidable");
    }

    bool is_monic() const {
        if (c_.empty()) return false;
        const C& lc = c_.back();
        return (lc - C::constant(Scalar::one(field_))).is_exact_zero();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> c(std::max(a.c_.size(), b.c_.size()), C::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Poly(a.field_, std::move(c));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<C> c(a.c_.size() + b.c_.size() - 1, C::zero(a.field_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_exact_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_exact_zero()) continue;
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return Poly(a.field_, std::move(c));
    }
    Poly scaled(const C& s) const {
        std::vector<C> c;
        c.reserve(c_.size());
        for (const auto& x : c_) c.push_back(x * s);
        return Poly(field_, std::move(c));
    }

    Poly pow(unsigned n) const {
        Poly r = constant(C::constant(Scalar::one(field_)));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// Horner evaluation at a.
    C operator()(const C& a) const {
        C acc = C::zero(field_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
        return acc;
    }

    /// Division by a monic divisor; returns {quotient, remainder}.
    static std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& q) {
        if (!q.is_monic()) throw DomainError("divisor must be monic");
        long dq = q.degree();
        if (a.degree() < dq) return {Poly(a.field_), a};
        std::vector<C> rem = a.c_;
        std::vector<C> quot(static_cast<std::size_t>(a.degree() - dq + 1), C::zero(a.field_));
        for (long i = a.degree(); i >= dq; --i) {
            C factor = rem[static_cast<std::size_t>(i)];
            quot[static_cast<std::size_t>(i - dq)] = factor;
            if (factor.is_exact_zero()) continue;
            for (long j = 0; j <= dq; ++j) {
                auto& slot = rem[static_cast<std::size_t>(i - dq + j)];
                slot = slot - factor * q.c_[static_cast<std::size_t>(j)];
            }
        }
        rem.resize(static_cast<std::size_t>(dq));
        return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    /// Text form "(c_n)*X^n + ... + (c_0)", highest degree first.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const C& c = c_[static_cast<std::size_t>(i)];
            if (c.is_exact_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (i == 1) out += "*X";
            else if (i > 1) out += "*X^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
    }

    Field field_{};
    std::vector<C> c_;
};

using PolyS = Poly<Series>;
using PolyK = Poly<RatFunc>;

inline Scalar binomial(Field f, long n, long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar::from_integer(f, b);
}

/// Coefficients C_i with f(X) = sum C_i (X - a)^i, via the Hasse-derivative
/// formula C_i = sum_{j >= i} binom(j, i) a^(j-i) c_j.
template <Coefficient C>
std::vector<C> recenter_hasse(const Poly<C>& f, const C& a) {
    Field fld = f.field();
    long n = f.degree();
    if (n < 0) return {};
    std::vector<C> powers;
    powers.reserve(static_cast<std::size_t>(n) + 1);
    powers.push_back(C::constant(Scalar::one(fld)));
    bool a_zero = a.is_exact_zero();
    for (long j = 1; j <= n; ++j) powers.push_back(a_zero ? C::zero(fld) : powers.back() * a);
    std::vector<C> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        C acc = f.coeff(i);
        for (long j = i + 1; j <= n && !a_zero; ++j) {
            const C& cj = f.coeff(j);
            if (cj.is_exact_zero()) continue;
            Scalar b = binomial(fld, j, i);
            if (b.is_zero()) continue;
            acc = acc + (powers[static_cast<std::size_t>(j - i)] * cj).scaled(b);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// Hasse derivative D_i f = sum_j binom(j, i) c_j X^(j-i), so that
/// recenter_hasse(f, a)[i] == (D_i f)(a).
template <Coefficient C>
Poly<C> hasse_derivative(const Poly<C>& f, long i) {
    Field fld = f.field();
    if (i > f.degree()) return Poly<C>(fld);
    std::vector<C> c;
    for (long j = i; j <= f.degree(); ++j) c.push_back(f.coeff(j).scaled(binomial(fld, j, i)));
    return Poly<C>(fld, std::move(c));
}

/// Digits f_i with f = sum f_i Q^i and deg f_i < deg Q (Q monic).
template <Coefficient C>
std::vector<Poly<C>> qadic_expand(const Poly<C>& f, const Poly<C>& q) {
    if (q.degree() < 1) throw DomainError("Q-adic expansion needs deg Q >= 1");
    if (!q.is_monic()) throw DomainError("Q-adic expansion needs monic Q");
    std::vector<Poly<C>> digits;
    Poly<C> rest = f;
    if (rest.is_zero()) return {rest};
    while (!rest.is_zero()) {
        auto [quot, rem] = Poly<C>::divmod_monic(rest, q);
        digits.push_back(std::move(rem));
        rest = std::move(quot);
    }
    return digits;
}

/// Expand every coefficient into k((t)).
inline PolyS to_series_poly(const PolyK& f, const Rational& prec) {
    std::vector<Series> c;
    for (const auto& x : f.coeffs()) c.push_back(coerce(x, prec));
    return PolyS(f.field(), std::move(c));
}

/// Exact copy over K when every coefficient is an exact Laurent polynomial.
inline std::optional<PolyK> exact_over_k(const PolyS& f) {
    std::vector<RatFunc> c;
    for (const auto& x : f.coeffs()) {
        auto r = RatFunc::from_series(x);
        if (!r) return std::nullopt;
        c.push_back(std::move(*r));
    }
    return PolyK(f.field(), std::move(c));
}

/// One edge of a Newton polygon: `mult` roots z with v(center - z) == slope.
struct PolygonSegment {
    GroupVal slope;
    long mult = 0;
    friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

using NewtonPolygon = std::vector<PolygonSegment>;

/// Polygon from digit valuations; entry i describes C_i (exact PosInf for a
/// certified zero digit, a lower bound for a digit that vanishes to
/// precision). Segments are listed from the largest root valuation down.
inline NewtonPolygon newton_polygon_from_values(const std::vector<ValueBound>& values) {
    long n = static_cast<long>(values.size()) - 1;
    if (n < 0) throw ZeroPolynomial("Newton polygon of 0");
    const ValueBound& lead = values.back();
    if (!lead.exact) throw PrecisionExhausted("Newton polygon: leading digit undecidable");
    if (lead.value.is_inf()) throw ZeroPolynomial("Newton polygon: zero leading digit");

    NewtonPolygon out;
    long i0 = 0;
    while (i0 <= n && values[static_cast<std::size_t>(i0)].exact &&
           values[static_cast<std::size_t>(i0)].value.is_inf())
        ++i0;
    if (i0 > 0) out.push_back({GroupVal::inf(), i0});
    if (!values[static_cast<std::size_t>(i0)].exact)
        throw PrecisionExhausted("Newton polygon: lowest digit undecidable");

    struct Pt {
        long i;
        Rational v;
    };
    std::vector<Pt> pts;
    for (long i = i0; i <= n; ++i) {
        const ValueBound& b = values[static_cast<std::size_t>(i)];
        if (b.exact && !b.value.is_inf()) pts.push_back({i, b.value.rational()});
    }
    // Lower convex hull (monotone chain).
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // drop b when it lies on or above segment a-p
            Rational lhs = (b.v - a.v) * (p.i - a.i);
            Rational rhs = (p.v - a.v) * (b.i - a.i);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    // Undecided digits must sit on or above the hull.
    for (long i = i0; i <= n; ++i) {
        const ValueBound& b = values[static_cast<std::size_t>(i)];
        if (b.exact) continue;
        for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
            if (hull[h].i < i && i < hull[h + 1].i) {
                Rational at = hull[h].v + (hull[h + 1].v - hull[h].v) * (i - hull[h].i) /
                                              Rational(hull[h + 1].i - hull[h].i);
                if (b.value < GroupVal::fin(at))
                    throw PrecisionExhausted("Newton polygon: digit " + std::to_string(i) +
                                             " undecidable below the hull");
            }
        }
    }
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        long len = hull[h + 1].i - hull[h].i;
        Rational s = (hull[h].v - hull[h + 1].v) / Rational(len);
        s.canonicalize();
        out.push_back({GroupVal::fin(s), len});
    }
    return out;
}

/// Root-difference valuations v(center - z) of f, with multiplicities.
inline NewtonPolygon newton_polygon(const PolyS& f, const Series& center) {
    f.require_decided_degree("newton_polygon");
    std::vector<ValueBound> values;
    for (const auto& c : recenter_hasse(f, center)) values.push_back(c.val_bound());
    return newton_polygon_from_values(values);
}

inline long total_multiplicity(const NewtonPolygon& p) {
    long m = 0;
    for (const auto& s : p) m += s.mult;
    return m;
}

}  // namespace valwb
