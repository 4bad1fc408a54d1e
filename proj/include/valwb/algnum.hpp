#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valwb/errors.hpp"
#include "valwb/poly.hpp"
#include "valwb/series.hpp"

namespace valwb {

/// Working precision used when an exact expansion has to be paired with a
/// minimal polynomial whose coefficients do not expand exactly.
inline constexpr long kDefaultWorkPrecision = 64;

/// Algebraic element over K: a Puiseux expansion plus an optional monic
/// polynomial over K that it provably satisfies to precision. Irreducibility
/// is never inferred; the caller certifies it via `irreducible`.
struct AlgElement {
    Series expansion;
    std::optional<PolyK> minpoly;
    bool irreducible = false;
    /// minpoly is X^p - X - u over a field of characteristic p.
    bool artin_schreier = false;

    static AlgElement plain(Series s) { return AlgElement{std::move(s), std::nullopt, false, false}; }

    Field field() const { return expansion.field(); }
    friend bool operator==(const AlgElement&, const AlgElement&) = default;
};

namespace detail {

inline bool is_artin_schreier(const PolyK& q) {
    std::uint32_t p = q.field().characteristic();
    if (p == 0 || q.degree() != static_cast<long>(p) || !q.is_monic()) return false;
    for (long i = 1; i < q.degree(); ++i) {
        const RatFunc& c = q.coeff(i);
        if (i == 1) {
            if (!(c == RatFunc::integer(q.field(), -1))) return false;
        } else if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

inline Rational work_prec_for(const Series& s) {
    return s.is_exact() ? Rational(kDefaultWorkPrecision) : s.prec().rational();
}

}  // namespace detail

/// Certify that `s` is a root of the monic polynomial `q` to the available
/// precision. Throws NotARoot when q(s) has decidable finite valuation.
inline AlgElement attach_minpoly(Series s, PolyK q, bool irreducible = false) {
    if (!q.is_monic()) throw DomainError("minimal polynomial must be monic");
    if (!(q.field() == s.field())) throw FieldMismatch("minpoly vs expansion");
    Series value = to_series_poly(q, detail::work_prec_for(s))(s);
    if (value.has_support())
        throw NotARoot("q(s) = " + value.str() + " has valuation " + value.val().str());
    bool as = detail::is_artin_schreier(q);
    return AlgElement{std::move(s), std::move(q), irreducible, as};
}

/// [K(a):K] when it can be certified: by a caller-certified irreducible
/// minimal polynomial, by the ramification index of an exact Puiseux
/// polynomial (which generates a field of exactly that degree), or when a
/// known exponent of denominator deg Q forces Q to be irreducible.
inline long degree(const AlgElement& a) {
    if (a.minpoly && a.irreducible) return a.minpoly->degree();
    if (a.expansion.is_exact()) return a.expansion.ram();
    if (a.minpoly) {
        // v(a - b) for b the integral head of a lies in vK(a), so its
        // denominator divides e(K(a)|K) <= [K(a):K] <= deg Q.
        for (const auto& [e, c] : a.expansion.support()) {
            if (e.get_den() == 1) continue;
            if (e.get_den() == a.minpoly->degree()) return a.minpoly->degree();
            break;
        }
    }
    throw Uncertified("degree of " + a.expansion.str());
}

/// Image of a under the automorphism t^(1/e) -> zeta_e^m t^(1/e), or, for a
/// certified Artin-Schreier root, under a -> a + m.
inline AlgElement galois_twist(const AlgElement& a, long m) {
    const Series& s = a.expansion;
    Field f = s.field();
    if (a.artin_schreier && s.ram() == 1) {
        AlgElement out = a;
        out.expansion = s + Series::integer(f, m);
        return out;
    }
    long e = s.ram();
    if (e == 1 || m % e == 0) return a;
    auto zeta = primitive_root_of_unity(f, e);
    if (!zeta) throw NoRootOfUnity("no primitive " + std::to_string(e) + "-th root of unity in " + f.name());
    long mm = ((m % e) + e) % e;
    std::vector<std::pair<Rational, Scalar>> terms;
    for (const auto& [k, c] : s.terms()) {
        long power = static_cast<long>((static_cast<__int128>(((k % e) + e) % e) * mm) % e);
        terms.emplace_back(s.exponent_of(k), c * zeta->pow(static_cast<std::uint64_t>(power)));
    }
    AlgElement out = a;
    out.expansion = Series::from_terms(f, terms, s.prec());
    return out;
}

/// All conjugates reachable by twisting, when the twist group has the full
/// degree; nullopt when conjugates cannot be enumerated this way.
inline std::optional<std::vector<AlgElement>> enumerable_conjugates(const AlgElement& a) {
    long d = degree(a);
    if (a.artin_schreier && a.expansion.ram() == 1) {
        std::vector<AlgElement> out;
        for (long c = 0; c < d; ++c) out.push_back(galois_twist(a, c));
        return out;
    }
    long e = a.expansion.ram();
    if (e != d || e == 1) return std::nullopt;
    if (!primitive_root_of_unity(a.field(), e)) return std::nullopt;
    std::vector<AlgElement> out;
    for (long j = 0; j < e; ++j) out.push_back(galois_twist(a, j));
    return out;
}

/// max v(sigma a - tau a) over distinct conjugates, by enumeration.
inline GroupVal krasner_constant_conjugates(const AlgElement& a) {
    if (degree(a) < 2) throw Uncertified("Krasner constant needs a of degree >= 2");
    if (a.artin_schreier && a.expansion.ram() == 1) return GroupVal::fin(0);  // differences are units of F_p
    auto conj = enumerable_conjugates(a);
    if (!conj) throw Uncertified("conjugates of " + a.expansion.str() + " are not enumerable");
    std::optional<GroupVal> best;
    for (std::size_t i = 0; i < conj->size(); ++i) {
        for (std::size_t j = i + 1; j < conj->size(); ++j) {
            Series diff = (*conj)[i].expansion - (*conj)[j].expansion;
            if (diff.is_exact_zero()) continue;
            GroupVal v = diff.val();
            if (!best || *best < v) best = v;
        }
    }
    if (!best) throw Uncertified("no distinct conjugates");
    return *best;
}

/// max v(sigma a - a) read off the Newton polygon of minpoly(a + Y).
inline GroupVal krasner_constant_polygon(const AlgElement& a) {
    if (!a.minpoly) throw Uncertified("Krasner constant via polygon needs a minimal polynomial");
    if (degree(a) < 2) throw Uncertified("Krasner constant needs a of degree >= 2");
    PolyS q = to_series_poly(*a.minpoly, detail::work_prec_for(a.expansion));
    auto digits = recenter_hasse(q, a.expansion);
    std::vector<ValueBound> values;
    values.push_back(ValueBound::exactly(GroupVal::inf()));  // a is a certified root
    for (std::size_t i = 1; i < digits.size(); ++i) values.push_back(digits[i].val_bound());
    NewtonPolygon poly = newton_polygon_from_values(values);
    std::optional<GroupVal> best;
    for (const auto& seg : poly)
        if (!seg.slope.is_inf() && (!best || *best < seg.slope)) best = seg.slope;
    if (!best) throw Uncertified("a is purely inseparable; no distinct conjugates");
    return *best;
}

/// Krasner constant, preferring conjugate enumeration and falling back to
/// the shifted-polygon route.
inline GroupVal krasner_constant(const AlgElement& a) {
    if (a.artin_schreier || enumerable_conjugates(a)) return krasner_constant_conjugates(a);
    return krasner_constant_polygon(a);
}

/// Outcome of searching for a root of minpoly(a) in k((t)) matching a.
struct CompletionRoot {
    bool found = false;
    Series root;           // valid when found
    Rational budget;
    std::string note;      // why the search stopped
};

/// Solve minpoly(x) = 0 in k((t)) term by term along a's expansion: at each
/// exponent the residue equation of the matching polygon segment must hold.
/// A desk-scale verdict, not an irreducibility proof.
inline CompletionRoot minpoly_over_completion(const AlgElement& a, const Rational& budget) {
    if (!a.minpoly) throw Uncertified("minpoly_over_completion needs a minimal polynomial");
    Field f = a.field();
    const PolyK& q = *a.minpoly;
    CompletionRoot out;
    out.budget = budget;
    if (q.degree() == 1) {
        out.found = true;
        out.root = -coerce(q.coeff(0), budget);
        out.note = "linear minimal polynomial";
        return out;
    }
    PolyS qs = to_series_poly(q, std::max(budget, detail::work_prec_for(a.expansion)));
    Series x = Series::zero(f);
    for (;;) {
        auto digits = recenter_hasse(qs, x);
        if (digits[0].is_exact_zero()) {
            out.found = true;
            out.root = x;
            out.note = "exact root in K";
            return out;
        }
        Series diff = a.expansion - x;
        if (diff.is_unknown_zero()) {
            if (diff.prec() >= GroupVal::fin(budget)) {
                out.found = true;
                out.root = x.with_prec(GroupVal::fin(budget));
                out.note = "root agrees with expansion to O(t^" + budget.get_str() + ")";
            } else {
                out.note = "expansion exhausted at O(t^" + diff.prec().str() + ") before budget";
            }
            return out;
        }
        GroupVal d = diff.val();
        if (d >= GroupVal::fin(budget)) {
            out.found = true;
            out.root = x.with_prec(GroupVal::fin(budget));
            out.note = "root agrees with expansion to O(t^" + budget.get_str() + ")";
            return out;
        }
        const Rational& dq = d.rational();
        if (dq.get_den() != 1) {
            out.note = "residue equation at exponent " + dq.get_str() + " has no solution in k((t))";
            return out;
        }
        // The segment of slope d carries the residue equation for the next term.
        std::vector<ValueBound> values;
        for (const auto& c : digits) values.push_back(c.val_bound());
        NewtonPolygon poly = newton_polygon_from_values(values);
        long start = 0;
        bool located = false;
        long seg_len = 0;
        for (const auto& seg : poly) {
            if (seg.slope == d) {
                located = true;
                seg_len = seg.mult;
                break;
            }
            start += seg.mult;
        }
        if (!located) {
            out.note = "no polygon segment of slope " + dq.get_str();
            return out;
        }
        Scalar c = diff.leading_coeff();
        GroupVal base = digits[static_cast<std::size_t>(start)].val();
        Scalar residue_value = Scalar::zero(f);
        Scalar cpow = Scalar::one(f);
        for (long i = start; i <= start + seg_len; ++i) {
            const Series& ci = digits[static_cast<std::size_t>(i)];
            GroupVal on_line = base - d.times(i - start);
            if (ci.has_support() && ci.val() == on_line) residue_value += ci.leading_coeff() * cpow;
            cpow *= c;
        }
        if (!residue_value.is_zero()) {
            out.note = "residue equation fails at exponent " + dq.get_str();
            return out;
        }
        x = x + Series::monomial(c, dq);
    }
}

}  // namespace valwb
