#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valwb/algnum.hpp"
#include "valwb/errors.hpp"
#include "valwb/pcs.hpp"
#include "valwb/poly.hpp"
#include "valwb/valuation.hpp"

namespace valwb {

enum class ExtensionKind {
    ResidueTranscendental,
    ValueTranscendentalCofinal,
    ValueTranscendentalUniquePair,
    ValuationAlgebraicTypeI,
    ValuationAlgebraicTypeII,
};

inline std::string to_string(ExtensionKind k) {
    switch (k) {
        case ExtensionKind::ResidueTranscendental: return "ResidueTranscendental";
        case ExtensionKind::ValueTranscendentalCofinal: return "ValueTranscendentalCofinal";
        case ExtensionKind::ValueTranscendentalUniquePair: return "ValueTranscendentalUniquePair";
        case ExtensionKind::ValuationAlgebraicTypeI: return "ValuationAlgebraicTypeI";
        case ExtensionKind::ValuationAlgebraicTypeII: return "ValuationAlgebraicTypeII";
    }
    return "?";
}

inline bool is_valuation_transcendental(ExtensionKind k) {
    return k != ExtensionKind::ValuationAlgebraicTypeI && k != ExtensionKind::ValuationAlgebraicTypeII;
}

/// Knobs shared by the constructions that materialize limits.
struct LiftingContext {
    Rational precision{64};
    long ram_cap = 64;
    long extend_limit = 4096;
};

struct Classification {
    ExtensionKind kind;
    std::string citation;
    std::string report;
    std::optional<GeneratorClass> generator;  // for sequence limits
};

inline Classification classify_extension(const ValuationSpec& spec, const LiftingContext& ctx = {}) {
    auto by_gamma = [&](const GroupVal& g) -> Classification {
        if (spec.declared_cofinal())
            return {ExtensionKind::ValueTranscendentalCofinal, "cofinality transfer between K and its completion",
                    "cofinality declared in the config", std::nullopt};
        if (g.z() == 0)
            return {ExtensionKind::ResidueTranscendental, "value-transcendental dichotomy",
                    "gamma = " + g.str() + " lies in the divisible hull of vK", std::nullopt};
        return {ExtensionKind::ValueTranscendentalUniquePair, "unique pair of definition",
                "gamma = " + g.str() + " exceeds every element of the divisible hull of vK", std::nullopt};
    };
    if (spec.is_gauss()) return by_gamma(GroupVal::fin(0));
    if (spec.is_monomial()) return by_gamma(spec.as_monomial().gamma);
    if (spec.is_keypoly()) {
        const auto& k = spec.as_keypoly();
        return by_gamma(k.pair ? k.pair->gamma : k.vq);
    }
    const auto& s = spec.as_pcs_limit();
    GeneratorClass gc = classify_generator(s.gen, ctx.precision, ctx.ram_cap, ctx.extend_limit);
    if (gc.verdict == GeneratorClass::Verdict::CauchyWithLimit)
        return {ExtensionKind::ValuationAlgebraicTypeII, "valuation algebraic of type II",
                "Cauchy sequence; " + gc.report, gc};
    return {ExtensionKind::ValuationAlgebraicTypeI, "valuation algebraic of type I",
            gc.criterion + ": " + gc.report, gc};
}

struct Induced {
    ValuationSpec spec;
    std::string note;
};

/// The induced extension on Khat(X).
inline Induced induce(const ValuationSpec& spec, const LiftingContext& ctx = {}) {
    if (spec.is_pcs_limit()) {
        Classification c = classify_extension(spec, ctx);
        if (c.kind == ExtensionKind::ValuationAlgebraicTypeII)
            return {ValuationSpec::monomial(c.generator->limit, GroupVal::lex(1, 0), FieldTag::OverKhat),
                    "limit center with gamma = (1, 0)"};
        return {spec.with_tag(FieldTag::OverKhat), "immediate extension; same sequence over the completion"};
    }
    if (spec.is_keypoly() && spec.as_keypoly().pair) {
        const auto& p = *spec.as_keypoly().pair;
        return {ValuationSpec::monomial(p.center, p.gamma, FieldTag::OverKhat).declare_cofinal(spec.declared_cofinal()),
                "rewritten through the defining pair"};
    }
    return {spec.with_tag(FieldTag::OverKhat), "same pair of definition"};
}

/// One key polynomial with its delta.
struct CskpEntry {
    PolyS q;
    GroupVal delta;
};

/// A candidate complete sequence of key polynomials, ordered by delta.
class CskpSeq {
public:
    CskpSeq() = default;
    explicit CskpSeq(std::vector<CskpEntry> entries) : entries_(std::move(entries)) { check(); }

    const std::vector<CskpEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const CskpEntry& operator[](std::size_t i) const { return entries_.at(i); }
    void push_back(CskpEntry e) {
        entries_.push_back(std::move(e));
        check();
    }

    /// Build from polynomials, computing each delta under `spec`.
    static CskpSeq from_polys(const std::vector<PolyS>& qs, const ValuationSpec& spec) {
        std::vector<CskpEntry> e;
        for (const auto& q : qs) e.push_back({q, delta(spec, q)});
        return CskpSeq(std::move(e));
    }

private:
    void check() const {
        for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
            if (!(entries_[i].delta < entries_[i + 1].delta))
                throw InvalidSpec("key polynomial deltas must strictly increase (entry " + std::to_string(i + 1) +
                                  ")");
    }
    std::vector<CskpEntry> entries_;
};

/// First index nu with deg Q_nu <= deg f and v f = v_{Q_nu} f.
struct CskpWitness {
    bool found = false;
    long index = -1;
};

inline CskpWitness cskp_check(const CskpSeq& seq, const PolyS& f, const ValuationSpec& spec) {
    if (f.is_zero()) throw ZeroPolynomial("cskp_check of 0");
    if (f.degree() == 0) return {true, 0};
    GroupVal vf = eval(spec, f);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const PolyS& q = seq[i].q;
        if (q.degree() > f.degree()) continue;
        GroupVal vq = eval(spec, q);
        MinAccumulator acc;
        auto digits = qadic_expand(f, q);
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (digits[j].is_zero()) continue;
            // a digit that vanishes to the working precision only bounds its term from below
            ValueBound b = eval_bound(spec, digits[j]);
            acc.add({b.value + vq.times(static_cast<long>(j)), b.exact});
        }
        // the expansion minimum never exceeds v(f), so a lower bound >= v(f) pins it
        if (acc.result().value >= vf) return {true, static_cast<long>(i)};
    }
    return {};
}

struct LiftResult {
    CskpSeq seq;
    ExtensionKind kind;
    std::string note;
    std::vector<std::string> warnings;
};

/// Lift a complete sequence for v over K to one for the induced extension.
inline LiftResult lift_cskp(const CskpSeq& seq, const ValuationSpec& spec, const LiftingContext& ctx = {}) {
    Classification c = classify_extension(spec, ctx);
    LiftResult out{seq, c.kind, "sequence unchanged", {}};
    auto keep_up_to_degree = [&](long d, const std::optional<PolyK>& drop) {
        std::vector<CskpEntry> kept;
        for (const auto& e : seq.entries()) {
            if (e.q.degree() > d) continue;
            if (drop) {
                auto qk = exact_over_k(e.q);
                if (qk && *qk == *drop) continue;
            }
            kept.push_back(e);
        }
        return kept;
    };
    if (c.kind == ExtensionKind::ValueTranscendentalUniquePair) {
        const AlgElement& a = spec.is_monomial() ? spec.as_monomial().center : spec.as_keypoly().pair->center;
        const GroupVal& gamma = spec.is_monomial() ? spec.as_monomial().gamma : spec.as_keypoly().pair->gamma;
        Series root;
        if (a.minpoly) {
            CompletionRoot r = minpoly_over_completion(a, ctx.precision);
            if (!r.found) {
                out.warnings.push_back("minimal polynomial over the completion not found (budget " +
                                       ctx.precision.get_str() + "): " + r.note + "; Q_a kept");
                out.note = "inconclusive";
                return out;
            }
            root = r.root;
        } else if (a.expansion.ram() == 1) {
            root = a.expansion;  // the center already lies in the completion
        } else {
            out.warnings.push_back("center is neither certified nor in the completion; Q_a kept");
            out.note = "inconclusive";
            return out;
        }
        auto kept = keep_up_to_degree(1, a.minpoly);
        kept.push_back({PolyS::linear(root), gamma});
        out.seq = CskpSeq(std::move(kept));
        out.note = "Q_a replaced by X - a over the completion";
        return out;
    }
    if (c.kind == ExtensionKind::ValuationAlgebraicTypeII) {
        auto kept = keep_up_to_degree(1, std::nullopt);
        kept.push_back({PolyS::linear(c.generator->limit), GroupVal::lex(1, 0)});
        out.seq = CskpSeq(std::move(kept));
        out.note = "appended X - a for the limit a";
        return out;
    }
    return out;
}

/// n^n alpha - 3 n^n (v_{0,0} f - v c_n) + v c_n.
inline GroupVal roots_matching_threshold(const PolyS& f, const GroupVal& alpha) {
    if (!alpha.is_fin()) throw DomainError("alpha must be a rational value");
    if (f.is_zero()) throw ZeroPolynomial("threshold of 0");
    f.require_decided_degree("roots_matching_threshold");
    long n = f.degree();
    ValueBound gauss = eval_bound(ValuationSpec::gauss(), f);
    if (!gauss.exact) throw PrecisionExhausted("Gauss value of f undecidable");
    Rational v00 = gauss.value.rational();
    Rational vcn = f.leading().val().rational();
    Integer nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    Rational nnq(nn);
    Rational out = nnq * alpha.rational() - 3 * nnq * (v00 - vcn) + vcn;
    out.canonicalize();
    return GroupVal::fin(out);
}

/// A named postcondition of an approximation, with the values compared.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline bool all_passed(const std::vector<Check>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.passed; });
}

namespace detail {

inline PolyK truncate_poly(const PolyS& f, const Rational& cutoff) {
    std::vector<RatFunc> c;
    for (const auto& x : f.coeffs()) c.push_back(x.is_exact_zero() ? RatFunc::zero(f.field()) : truncate_laurent(x, cutoff));
    return PolyK(f.field(), std::move(c));
}

inline PolyS lift(const PolyK& f) {
    std::vector<Series> c;
    for (const auto& x : f.coeffs()) c.push_back(coerce(x, 0));
    return PolyS(f.field(), std::move(c));
}

inline bool is_exact_poly(const PolyS& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_exact() || c.ram() != 1) return false;
    return true;
}

inline Rational cutoff_ceiling(const PolyS& f) {
    std::optional<Rational> best;
    for (const auto& c : f.coeffs())
        if (!c.is_exact() && (!best || c.prec().rational() < *best)) best = c.prec().rational();
    return best ? *best : Rational(1L << 20);
}

}  // namespace detail

/// Outcome of the same-delta approximation.
struct SameDeltaResult {
    PolyK f;
    Rational threshold;
    Rational cutoff;
    std::vector<Check> checks;
};

inline std::vector<Check> verify_same_delta(const PolyS& f, const PolyS& fp, const ValuationSpec& spec) {
    std::vector<Check> out;
    out.push_back({"deg f' = deg f", fp.degree() == f.degree(),
                   std::to_string(fp.degree()) + " vs " + std::to_string(f.degree())});
    auto compare = [&](const std::string& name, auto fn) {
        try {
            GroupVal a = fn(f), b = fn(fp);
            out.push_back({name, a == b, a.str() + " vs " + b.str()});
        } catch (const Error& e) {
            out.push_back({name, false, e.what()});
        }
    };
    compare("v f' = v f", [&](const PolyS& p) { return eval(spec, p); });
    compare("delta(f') = delta(f)", [&](const PolyS& p) { return delta(spec, p); });
    return out;
}

/// f' over K with deg f' = deg f, v f' = v f and delta(f') = delta(f), for
/// delta(f) < alpha. Coefficients are truncated above the continuity-of-roots
/// threshold; the cutoff is raised until the equalities are verified.
inline SameDeltaResult approximate_same_delta(const PolyS& f, const GroupVal& alpha, const ValuationSpec& spec) {
    if (!alpha.is_fin()) throw DomainError("alpha must be a rational value");
    if (spec.is_pcs_limit()) throw UnsupportedKind("same-delta approximation needs a pair of definition");
    f.require_decided_degree("approximate_same_delta");
    GroupVal d = delta(spec, f);
    if (!(d < alpha)) throw DeltaTooLarge("delta(f) = " + d.str() + " is not below alpha = " + alpha.str());
    SameDeltaResult out;
    out.threshold = roots_matching_threshold(f, alpha).rational();
    if (detail::is_exact_poly(f)) {
        out.f = *exact_over_k(f);
        out.cutoff = 0;
        out.checks = verify_same_delta(f, f, spec);
        return out;
    }
    Rational ceiling = detail::cutoff_ceiling(f);
    Rational cutoff = floor_plus_one(out.threshold);
    if (cutoff < 1) cutoff = 1;
    for (;;) {
        if (cutoff > ceiling)
            throw PrecisionExhausted("coefficients known to O(t^" + ceiling.get_str() + ") but cutoff " +
                                     cutoff.get_str() + " is required");
        PolyK fp = detail::truncate_poly(f, cutoff);
        auto checks = verify_same_delta(f, detail::lift(fp), spec);
        if (all_passed(checks)) {
            out.f = std::move(fp);
            out.cutoff = cutoff;
            out.checks = std::move(checks);
            return out;
        }
        Rational next = cutoff * 2;
        cutoff = (cutoff < ceiling && next > ceiling) ? ceiling : next;
    }
}

/// Root pairing check for one perturbation. Compares the clipped polygons
/// {min(s, alpha)} at every center; with pre-factored roots it also pairs
/// the roots by brute force and checks every paired difference exceeds alpha.
struct RootMatching {
    bool applicable = false;  // v_{0,0}(f - f') exceeds the threshold
    bool polygons_agree = false;
    std::optional<bool> roots_paired;
    std::string detail;
};

namespace detail {

inline std::vector<std::pair<GroupVal, long>> clipped(const NewtonPolygon& p, const GroupVal& alpha) {
    std::vector<std::pair<GroupVal, long>> out;
    for (const auto& s : p) {
        GroupVal v = min(s.slope, alpha);
        if (!out.empty() && out.back().first == v) out.back().second += s.mult;
        else out.emplace_back(v, s.mult);
    }
    return out;
}

inline GroupVal best_pairing(const std::vector<Series>& z, const std::vector<Series>& w) {
    std::vector<std::size_t> perm(w.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::optional<GroupVal> best;
    do {
        std::optional<GroupVal> worst;
        for (std::size_t i = 0; i < z.size(); ++i) {
            Series d = z[i] - w[perm[i]];
            GroupVal v = d.is_exact_zero() ? GroupVal::inf() : d.val_bound().value;
            if (!worst || v < *worst) worst = v;
        }
        if (!best || *best < *worst) best = worst;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

}  // namespace detail

inline RootMatching verify_root_matching(const PolyS& f, const PolyS& fp, const GroupVal& alpha,
                                         const std::vector<Series>& centers = {},
                                         const std::vector<Series>& roots_f = {},
                                         const std::vector<Series>& roots_fp = {}) {
    RootMatching out;
    GroupVal t = roots_matching_threshold(f, alpha);
    ValueBound diff = (f - fp).is_zero() ? ValueBound::exactly(GroupVal::inf())
                                         : eval_bound(ValuationSpec::gauss(), f - fp);
    out.applicable = diff.value > t;
    if (!out.applicable) {
        out.detail = "v(f - f') >= " + diff.value.str() + " does not exceed the threshold " + t.str();
        return out;
    }
    std::vector<Series> all = centers;
    all.insert(all.begin(), Series::zero(f.field()));
    out.polygons_agree = true;
    for (const auto& c : all) {
        if (detail::clipped(newton_polygon(f, c), alpha) != detail::clipped(newton_polygon(fp, c), alpha)) {
            out.polygons_agree = false;
            out.detail = "polygons differ at center " + c.str();
            break;
        }
    }
    if (!roots_f.empty()) {
        if (roots_f.size() != roots_fp.size() || static_cast<long>(roots_f.size()) != f.degree())
            throw DomainError("root lists must match the degree");
        GroupVal best = detail::best_pairing(roots_f, roots_fp);
        out.roots_paired = best > alpha;
        if (!*out.roots_paired) out.detail = "best root pairing reaches only " + best.str();
    }
    return out;
}

/// Outcome of the density approximation.
struct DensityResult {
    PolyK f;
    PolyK g;
    Rational beta;    // chosen beta, including the +1 margin
    Rational cutoff;  // coefficients agree below t^cutoff
    long nu = -1;     // sequence index used for a sequence limit
    std::vector<Check> checks;
};

inline const char* kDensityCitation =
    "density obstruction: the completion of K is not contained in the completion of K(X)";

/// The seven postconditions, by independent evaluation under `spec`.
inline std::vector<Check> verify_density(const PolyS& f, const PolyS& g, const PolyS& fp, const PolyS& gp,
                                         const GroupVal& alpha, const ValuationSpec& spec) {
    std::vector<Check> out;
    out.push_back({"deg f' = deg f", fp.degree() == f.degree(),
                   std::to_string(fp.degree()) + " vs " + std::to_string(f.degree())});
    out.push_back({"deg g' = deg g", gp.degree() == g.degree(),
                   std::to_string(gp.degree()) + " vs " + std::to_string(g.degree())});
    auto guarded = [&](const std::string& name, auto fn) {
        try {
            auto [ok, detail] = fn();
            out.push_back({name, ok, detail});
        } catch (const Error& e) {
            out.push_back({name, false, e.what()});
        }
    };
    guarded("v f' = v f", [&] {
        GroupVal a = eval(spec, fp), b = eval(spec, f);
        return std::pair{a == b, a.str() + " vs " + b.str()};
    });
    guarded("v g' = v g", [&] {
        GroupVal a = eval(spec, gp), b = eval(spec, g);
        return std::pair{a == b, a.str() + " vs " + b.str()};
    });
    auto above = [&](const PolyS& d) {
        if (d.is_zero()) return std::pair{true, std::string("difference is 0")};
        ValueBound b = eval_bound(spec, d);
        return std::pair{b.value > alpha, std::string(b.exact ? "= " : ">= ") + b.value.str()};
    };
    guarded("v(f - f') > alpha", [&] { return above(f - fp); });
    guarded("v(g - g') > alpha", [&] { return above(g - gp); });
    guarded("v(f/g - f'/g') > alpha", [&] {
        PolyS num = f * gp - fp * g;
        if (num.is_zero()) return std::pair{true, std::string("f/g = f'/g'")};
        ValueBound b = eval_bound(spec, num);
        GroupVal den = eval(spec, g * gp);
        GroupVal v = b.value - den;
        return std::pair{v > alpha, std::string(b.exact ? "= " : ">= ") + v.str()};
    });
    return out;
}

namespace detail {

/// beta and cutoff for the monomial case at (a, gamma), as rationals.
inline std::pair<Rational, Rational> density_cutoff(const PolyS& f, const PolyS& g, const GroupVal& alpha,
                                                    const AlgElement& a, const GroupVal& gamma,
                                                    const GroupVal& vg) {
    auto least = [](const CenterDigits& d) {
        std::optional<GroupVal> m;
        for (const auto& v : d.values) {
            if (!v.exact) throw PrecisionExhausted("recentered digit undecidable");
            if (!m || v.value < *m) m = v.value;
        }
        return *m;
    };
    GroupVal cd = min(least(center_digits(f, a)), least(center_digits(g, a)));
    // beta + i gamma > alpha for i >= 0 and beta + min{C, D} + k gamma > alpha + 2 v g for k >= 0;
    // gamma >= 0, so i = k = 0 are binding.
    GroupVal need = max(alpha, alpha + vg.times(2) - cd);
    if (!need.is_fin()) throw UnsupportedKind("beta is not representable in the value group of K");
    Rational beta = floor_plus_one(need.rational()) + 1;  // minimal integer, plus margin
    Rational bound = beta;
    if (a.expansion.has_support()) {
        Rational va = a.expansion.val().rational();
        long n = std::max(f.degree(), g.degree());
        for (long i = 1; i <= n; ++i) bound = std::max(bound, Rational(beta - i * va));
    }
    (void)gamma;
    return {beta, floor_plus_one(bound)};
}

}  // namespace detail

/// f', g' over K approximating f, g closely enough that f/g and f'/g' agree past alpha.
inline DensityResult approximate_density(const PolyS& f, const PolyS& g, const GroupVal& alpha,
                                         const ValuationSpec& spec, const LiftingContext& ctx = {}) {
    if (!alpha.is_fin()) throw DomainError("alpha must be a rational value");
    if (g.is_zero()) throw ZeroPolynomial("density with g = 0");
    Classification c = classify_extension(spec, ctx);
    if (c.kind == ExtensionKind::ValueTranscendentalUniquePair || c.kind == ExtensionKind::ValuationAlgebraicTypeII)
        throw UnsupportedKind(to_string(c.kind) + ": " + kDensityCitation);
    f.require_decided_degree("approximate_density");
    g.require_decided_degree("approximate_density");

    DensityResult out;
    if (detail::is_exact_poly(f) && detail::is_exact_poly(g)) {
        out.f = *exact_over_k(f);
        out.g = *exact_over_k(g);
        out.checks = verify_density(f, g, f, g, alpha, spec);
        return out;
    }

    AlgElement center = AlgElement::plain(Series::zero(f.field()));
    GroupVal gamma = GroupVal::fin(0);
    GroupVal a0 = alpha;
    GroupVal vg = eval(spec, g);
    if (spec.is_monomial()) {
        center = spec.as_monomial().center;
        gamma = spec.as_monomial().gamma;
    } else if (spec.is_keypoly()) {
        if (!spec.as_keypoly().pair) throw Uncertified("density under a key-polynomial spec needs its pair");
        center = spec.as_keypoly().pair->center;
        gamma = spec.as_keypoly().pair->gamma;
    } else if (spec.is_pcs_limit()) {
        // Pick nu where the monomial approximation already sees v f and v g.
        const auto& s = spec.as_pcs_limit();
        GroupVal vf = eval(spec, f);
        for (long nu = 0; nu < s.gen.horizon() && out.nu < 0; ++nu) {
            AlgElement an = AlgElement::plain(s.gen.element(nu));
            ValueBound bf = detail::monomial_eval(f, an, s.gen.gamma(nu));
            ValueBound bg = detail::monomial_eval(g, an, s.gen.gamma(nu));
            if (bf.exact && bg.exact && bf.value == vf && bg.value == vg) {
                out.nu = nu;
                center = an;
                gamma = s.gen.gamma(nu);
            }
        }
        if (out.nu < 0) throw HorizonExceeded("no sequence index realizes v f and v g");
        a0 = GroupVal::fin(floor_plus_one(max(alpha, max(vf, vg)).rational()));
    }
    auto [beta, cutoff] = detail::density_cutoff(f, g, a0, center, gamma, vg);
    out.beta = beta;
    Rational ceiling = std::min(detail::cutoff_ceiling(f), detail::cutoff_ceiling(g));
    for (;;) {
        if (cutoff > ceiling)
            throw PrecisionExhausted("coefficients known to O(t^" + ceiling.get_str() + ") but cutoff " +
                                     cutoff.get_str() + " is required");
        PolyK fp = detail::truncate_poly(f, cutoff);
        PolyK gp = detail::truncate_poly(g, cutoff);
        auto checks = verify_density(f, g, detail::lift(fp), detail::lift(gp), alpha, spec);
        if (all_passed(checks)) {
            out.f = std::move(fp);
            out.g = std::move(gp);
            out.cutoff = cutoff;
            out.checks = std::move(checks);
            return out;
        }
        Rational next = cutoff * 2;
        cutoff = (cutoff < ceiling && next > ceiling) ? ceiling : next;
    }
}

/// Evaluations of the two monomial specs agree on every sample.
struct UniquenessReport {
    long agreements = 0;
    long inconclusive = 0;
    std::vector<std::string> discrepancies;
};

inline UniquenessReport uniqueness_check(const PairOfDefinition& p1, const PairOfDefinition& p2,
                                         const std::vector<PolyS>& samples) {
    if (!(p1.gamma == p2.gamma)) throw DomainError("pairs must share gamma");
    if (!is_pair_equivalent(p1.center.expansion, p2.center.expansion, p1.gamma))
        throw DomainError("centers are not equivalent at gamma = " + p1.gamma.str());
    auto s1 = ValuationSpec::monomial(p1.center, p1.gamma, FieldTag::OverKhat);
    auto s2 = ValuationSpec::monomial(p2.center, p2.gamma, FieldTag::OverKhat);
    UniquenessReport out;
    for (const auto& f : samples) {
        try {
            GroupVal a = eval(s1, f), b = eval(s2, f);
            if (a == b) ++out.agreements;
            else out.discrepancies.push_back(f.str() + ": " + a.str() + " vs " + b.str());
        } catch (const PrecisionExhausted&) {
            ++out.inconclusive;
        }
    }
    return out;
}

/// The twisted center shares the minimal polynomial and the classification.
struct ConjugacyReport {
    AlgElement twisted;
    bool shares_minpoly = false;
    bool same_kind = false;
    bool same_value = false;
    ExtensionKind kind;
    ExtensionKind twisted_kind;
    std::string detail;
};

inline ConjugacyReport conjugacy_check(const AlgElement& a, const GroupVal& gamma, long m,
                                       const LiftingContext& ctx = {}) {
    if (!a.minpoly) throw Uncertified("conjugacy check needs a minimal polynomial");
    ConjugacyReport out;
    out.twisted = galois_twist(a, m);
    try {
        AlgElement certified = attach_minpoly(out.twisted.expansion, *a.minpoly, a.irreducible);
        out.shares_minpoly = true;
        out.twisted = certified;
    } catch (const NotARoot& e) {
        out.detail = e.what();
    }
    out.same_value = out.twisted.expansion.val() == a.expansion.val();
    out.kind = classify_extension(ValuationSpec::monomial(a, gamma), ctx).kind;
    out.twisted_kind = classify_extension(ValuationSpec::monomial(out.twisted, gamma), ctx).kind;
    out.same_kind = out.kind == out.twisted_kind;
    return out;
}

}  // namespace valwb
