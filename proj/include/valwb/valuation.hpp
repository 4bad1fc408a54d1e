#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "valwb/algnum.hpp"
#include "valwb/errors.hpp"
#include "valwb/pcs.hpp"
#include "valwb/poly.hpp"
#include "valwb/sampling.hpp"

namespace valwb {

/// Which field the extension is taken over: K = k(t) or its completion.
enum class FieldTag { OverK, OverKhat };

inline std::string to_string(FieldTag t) { return t == FieldTag::OverK ? "K" : "Khat"; }

/// (a, gamma) with v(X - a) = gamma = max v(X - Kbar).
struct PairOfDefinition {
    AlgElement center;
    GroupVal gamma;
};

class ValuationSpec;

struct GaussSpec {};
struct MonomialSpec {
    AlgElement center;
    GroupVal gamma;
};
struct KeyPolySpec {
    PolyS q;
    GroupVal vq;
    std::shared_ptr<const ValuationSpec> base;  // evaluates the Q-adic digits
    std::optional<PairOfDefinition> pair;       // defining minimal pair, when known
};
struct PcsLimitSpec {
    PcsGenerator gen;
    long window = 3;
};

/// A valuation on K(X) or Khat(X), given by one of the four constructions.
class ValuationSpec {
public:
    using Body = std::variant<GaussSpec, MonomialSpec, KeyPolySpec, PcsLimitSpec>;

    static ValuationSpec gauss(FieldTag tag = FieldTag::OverK) { return ValuationSpec(GaussSpec{}, tag); }

    static ValuationSpec monomial(AlgElement center, GroupVal gamma, FieldTag tag = FieldTag::OverK) {
        if (gamma.is_inf()) throw InvalidSpec("monomial gamma must be finite");
        if (gamma.z() < 0) throw InvalidSpec("monomial gamma " + gamma.str() + " lies below the value group");
        return ValuationSpec(MonomialSpec{std::move(center), std::move(gamma)}, tag);
    }
    static ValuationSpec monomial(Series center, GroupVal gamma, FieldTag tag = FieldTag::OverK) {
        return monomial(AlgElement::plain(std::move(center)), std::move(gamma), tag);
    }

    static ValuationSpec keypoly(PolyS q, GroupVal vq, const ValuationSpec& base,
                                 std::optional<PairOfDefinition> pair = std::nullopt,
                                 FieldTag tag = FieldTag::OverK) {
        if (q.degree() < 1 || !q.is_monic()) throw InvalidSpec("key polynomial must be monic of degree >= 1");
        if (vq.is_inf()) throw InvalidSpec("v(Q) must be finite");
        return ValuationSpec(KeyPolySpec{std::move(q), std::move(vq), std::make_shared<const ValuationSpec>(base),
                                         std::move(pair)},
                             tag);
    }

    static ValuationSpec pcs_limit(PcsGenerator gen, long window = 3, FieldTag tag = FieldTag::OverK) {
        validate_generator(gen);
        if (window < 1 || window > gen.horizon()) throw InvalidSpec("window must lie in [1, horizon]");
        return ValuationSpec(PcsLimitSpec{std::move(gen), window}, tag);
    }

    const Body& body() const { return body_; }
    FieldTag tag() const { return tag_; }
    ValuationSpec with_tag(FieldTag t) const {
        ValuationSpec s = *this;
        s.tag_ = t;
        return s;
    }
    /// Set when the caller asserts the value group of K is cofinal in the
    /// extension's value group (not representable through gamma shapes).
    bool declared_cofinal() const { return declared_cofinal_; }
    ValuationSpec declare_cofinal(bool on = true) const {
        ValuationSpec s = *this;
        s.declared_cofinal_ = on;
        return s;
    }

    bool is_gauss() const { return std::holds_alternative<GaussSpec>(body_); }
    bool is_monomial() const { return std::holds_alternative<MonomialSpec>(body_); }
    bool is_keypoly() const { return std::holds_alternative<KeyPolySpec>(body_); }
    bool is_pcs_limit() const { return std::holds_alternative<PcsLimitSpec>(body_); }
    const MonomialSpec& as_monomial() const { return std::get<MonomialSpec>(body_); }
    const KeyPolySpec& as_keypoly() const { return std::get<KeyPolySpec>(body_); }
    const PcsLimitSpec& as_pcs_limit() const { return std::get<PcsLimitSpec>(body_); }

    std::string kind_name() const {
        static const char* names[] = {"gauss", "monomial", "keypoly", "pcslimit"};
        return names[body_.index()];
    }

    std::string str() const {
        std::string over = " over " + to_string(tag_);
        if (is_gauss()) return "Gauss" + over;
        if (is_monomial()) {
            const auto& m = as_monomial();
            return "Monomial(" + m.center.expansion.str() + ", " + m.gamma.str() + ")" + over;
        }
        if (is_keypoly()) {
            const auto& k = as_keypoly();
            return "KeyPoly(" + k.q.str() + ", " + k.vq.str() + ", " + k.base->str() + ")" + over;
        }
        return "PcsLimit(" + as_pcs_limit().gen.name() + ")" + over;
    }

private:
    ValuationSpec(Body b, FieldTag t) : body_(std::move(b)), tag_(t) {}

    Body body_;
    FieldTag tag_ = FieldTag::OverK;
    bool declared_cofinal_ = false;
};

/// Recentered digits C_i of f at a, with value bounds. A digit that vanishes
/// to precision is certified exactly zero when the center's minimal
/// polynomial divides the matching Hasse derivative of f (f exact over K),
/// or when f is literally X - a.
struct CenterDigits {
    std::vector<Series> digits;
    std::vector<ValueBound> values;
};

inline CenterDigits center_digits(const PolyS& f, const AlgElement& a) {
    CenterDigits out;
    out.digits = recenter_hasse(f, a.expansion);
    std::optional<std::optional<PolyK>> fk;
    for (std::size_t i = 0; i < out.digits.size(); ++i) {
        const Series& c = out.digits[i];
        ValueBound b = c.val_bound();
        if (c.is_unknown_zero()) {
            bool certified = false;
            if (i == 0 && f.degree() == 1 && f.coeff(1) == Series::integer(f.field(), 1) &&
                f.coeff(0) == -a.expansion)
                certified = true;
            if (!certified && a.minpoly) {
                if (!fk) fk = exact_over_k(f);
                if (*fk) {
                    PolyK d = hasse_derivative(**fk, static_cast<long>(i));
                    if (d.is_zero() || PolyK::divmod_monic(d, *a.minpoly).second.is_zero()) certified = true;
                }
            }
            if (certified) {
                out.digits[i] = Series::zero(f.field());
                b = ValueBound::exactly(GroupVal::inf());
            }
        }
        out.values.push_back(b);
    }
    return out;
}

namespace detail {

inline AlgElement zero_center(Field f) { return AlgElement::plain(Series::zero(f)); }

inline ValueBound monomial_eval(const PolyS& f, const AlgElement& a, const GroupVal& gamma) {
    CenterDigits d = center_digits(f, a);
    MinAccumulator acc;
    for (std::size_t i = 0; i < d.values.size(); ++i)
        acc.add(d.values[i] + ValueBound::exactly(gamma.times(static_cast<long>(i))));
    return acc.result();
}

/// max over roots z of min(gamma, v(a - z)) from recentered digit bounds.
inline GroupVal monomial_delta(const PolyS& f, const AlgElement& a, const GroupVal& gamma) {
    if (f.degree() < 1) throw DomainError("delta of a constant polynomial");
    f.require_decided_degree("delta");
    CenterDigits d = center_digits(f, a);
    const ValueBound& v0 = d.values[0];
    if (v0.exact && v0.value.is_inf()) return gamma;
    const Rational& base = v0.value.rational();
    std::optional<Rational> lower, upper;
    for (std::size_t k = 1; k < d.values.size(); ++k) {
        const ValueBound& b = d.values[k];
        if (b.exact && b.value.is_inf()) continue;
        Rational slope = (base - b.value.rational()) / Rational(static_cast<long>(k));
        if (b.exact && (!lower || *lower < slope)) lower = slope;
        if (!upper || *upper < slope) upper = slope;
    }
    GroupVal lo = GroupVal::fin(*lower);
    if (lo >= gamma) return gamma;
    if (v0.exact && *lower == *upper) return lo;
    throw PrecisionExhausted("delta: largest root valuation lies in [" + lower->get_str() + ", " +
                             (v0.exact ? upper->get_str() : std::string("?")) + "] below gamma = " + gamma.str());
}

}  // namespace detail

ValueBound eval_bound(const ValuationSpec& spec, const PolyS& f);

/// Exact value of f; PrecisionExhausted (or HorizonExceeded for a sequence
/// limit with no stable value) when only a bound is available.
inline GroupVal eval(const ValuationSpec& spec, const PolyS& f) {
    if (spec.is_pcs_limit()) {
        const auto& s = spec.as_pcs_limit();
        if (f.is_zero()) throw ZeroPolynomial("eval of 0");
        ValuesAlong va = values_along(f, s.gen, s.window);
        if (!va.ultimately_constant)
            throw HorizonExceeded("values of f along " + s.gen.name() + " still increase at horizon " +
                                  std::to_string(s.gen.horizon()));
        return va.value;
    }
    ValueBound b = eval_bound(spec, f);
    if (!b.exact) throw PrecisionExhausted("value of f is only known to be >= " + b.value.str());
    return b.value;
}

inline ValueBound eval_bound(const ValuationSpec& spec, const PolyS& f) {
    if (f.is_zero()) throw ZeroPolynomial("eval of 0");
    if (spec.is_gauss()) return detail::monomial_eval(f, detail::zero_center(f.field()), GroupVal::fin(0));
    if (spec.is_monomial()) {
        const auto& m = spec.as_monomial();
        return detail::monomial_eval(f, m.center, m.gamma);
    }
    if (spec.is_keypoly()) {
        const auto& k = spec.as_keypoly();
        auto digits = qadic_expand(f, k.q);
        MinAccumulator acc;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i].is_zero()) continue;
            acc.add(eval_bound(*k.base, digits[i]) + ValueBound::exactly(k.vq.times(static_cast<long>(i))));
        }
        return acc.result();
    }
    const auto& s = spec.as_pcs_limit();
    ValuesAlong va = values_along(f, s.gen, s.window);
    if (va.ultimately_constant) return ValueBound::exactly(va.value);
    // w(X - a_nu) = gamma_nu gives w f >= v_{a_nu, gamma_nu} f for every nu.
    std::optional<GroupVal> best;
    for (long nu = 0; nu < s.gen.horizon(); ++nu) {
        ValueBound b = detail::monomial_eval(f, AlgElement::plain(s.gen.element(nu)), s.gen.gamma(nu));
        if (!best || *best < b.value) best = b.value;
    }
    return ValueBound::at_least(*best);
}

/// v(f/g) = v f - v g.
inline GroupVal eval_rational(const ValuationSpec& spec, const PolyS& f, const PolyS& g) {
    if (g.is_zero()) throw ZeroPolynomial("eval_rational with g = 0");
    return eval(spec, f) - eval(spec, g);
}

/// delta(f) = max v(X - z) over the roots z of f.
inline GroupVal delta(const ValuationSpec& spec, const PolyS& f) {
    if (spec.is_gauss()) return detail::monomial_delta(f, detail::zero_center(f.field()), GroupVal::fin(0));
    if (spec.is_monomial()) {
        const auto& m = spec.as_monomial();
        return detail::monomial_delta(f, m.center, m.gamma);
    }
    if (spec.is_keypoly()) {
        const auto& k = spec.as_keypoly();
        if (!k.pair) throw Uncertified("delta under a key-polynomial spec needs its defining pair");
        return detail::monomial_delta(f, k.pair->center, k.pair->gamma);
    }
    const auto& s = spec.as_pcs_limit();
    std::vector<GroupVal> deltas;
    for (long nu = 0; nu < s.gen.horizon(); ++nu)
        deltas.push_back(detail::monomial_delta(f, AlgElement::plain(s.gen.element(nu)), s.gen.gamma(nu)));
    long n = static_cast<long>(deltas.size());
    for (long i = n - s.window; i < n; ++i)
        if (!(deltas[static_cast<std::size_t>(i)] == deltas.back()))
            throw HorizonExceeded("delta along " + s.gen.name() + " has not stabilized at horizon " +
                                  std::to_string(s.gen.horizon()));
    return deltas.back();
}

/// v(a - b) >= gamma: (a, gamma) and (b, gamma) define the same valuation.
inline bool is_pair_equivalent(const Series& a, const Series& b, const GroupVal& gamma) {
    Series d = a - b;
    if (d.is_exact_zero()) return true;
    ValueBound vb = d.val_bound();
    if (vb.exact) return vb.value >= gamma;
    if (vb.value >= gamma) return true;
    throw PrecisionExhausted("v(a - b) >= " + vb.value.str() + " cannot be compared with " + gamma.str());
}

/// Bounded search for f with deg f < deg Q and delta(f) >= delta(Q).
struct KeyPolyVerdict {
    bool counterexample = false;
    PolyS witness;
    long tested = 0;
    long inconclusive = 0;  // samples whose delta was undecidable
};

inline KeyPolyVerdict is_key_polynomial(const ValuationSpec& spec, const PolyS& q, long samples,
                                        const std::vector<Series>& pool, std::uint64_t seed) {
    if (!q.is_monic()) throw DomainError("key polynomial candidate must be monic");
    KeyPolyVerdict out;
    if (q.degree() < 2) return out;  // only constants lie below a linear Q
    GroupVal dq = delta(spec, q);
    Field f = q.field();
    auto test = [&](const PolyS& cand) -> bool {
        try {
            ++out.tested;
            if (delta(spec, cand) >= dq) {
                out.counterexample = true;
                out.witness = cand;
                return true;
            }
        } catch (const PrecisionExhausted&) {
            ++out.inconclusive;
        } catch (const HorizonExceeded&) {
            ++out.inconclusive;
        }
        return false;
    };
    std::vector<Series> centers = pool;
    centers.insert(centers.begin(), Series::zero(f));
    if (spec.is_monomial()) {
        const Series& a = spec.as_monomial().center.expansion;
        Series partial = Series::zero(f);
        for (const auto& [k, c] : a.terms()) {
            partial = partial + Series::monomial(c, a.exponent_of(k));
            centers.push_back(partial);
        }
    }
    for (const Series& c : centers)
        if (test(PolyS::linear(c))) return out;
    Sampler rng(seed);
    for (long d = 1; d < q.degree(); ++d)
        for (long s = 0; s < samples; ++s)
            if (test(rng.small_poly(f, d, true))) return out;
    return out;
}

/// Search for b with deg b < deg a and v(a - b) >= gamma.
struct MinimalPairVerdict {
    bool smaller_found = false;
    Series smaller;
    std::vector<std::string> warnings;
};

inline MinimalPairVerdict minimal_pair_search(const AlgElement& a, const GroupVal& gamma,
                                              const std::vector<AlgElement>& candidates = {}) {
    long da = degree(a);
    MinimalPairVerdict out;
    std::vector<AlgElement> pool;
    Field f = a.field();
    pool.push_back(AlgElement::plain(Series::zero(f)));
    Series partial = Series::zero(f);
    long taken = 0;
    for (const auto& [k, c] : a.expansion.terms()) {
        if (++taken > 256) break;
        partial = partial + Series::monomial(c, a.expansion.exponent_of(k));
        pool.push_back(AlgElement::plain(partial));
    }
    pool.insert(pool.end(), candidates.begin(), candidates.end());
    for (const auto& b : pool) {
        long db;
        try {
            db = degree(b);
        } catch (const Uncertified& e) {
            out.warnings.push_back(std::string("skipped candidate: ") + e.what());
            continue;
        }
        if (db >= da) continue;
        try {
            if (is_pair_equivalent(a.expansion, b.expansion, gamma)) {
                out.smaller_found = true;
                out.smaller = b.expansion;
                return out;
            }
        } catch (const PrecisionExhausted& e) {
            out.warnings.push_back(std::string("skipped candidate: ") + e.what());
        }
    }
    return out;
}

}  // namespace valwb
