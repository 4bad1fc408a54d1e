#pragma once

#include <functional>
#include <string>
#include <vector>

#include "valwb/examples.hpp"
#include "valwb/lifting.hpp"
#include "valwb/report.hpp"
#include "valwb/sampling.hpp"

namespace valwb {

namespace suite {

/// Tally of a sampled property with the first few failures kept.
struct Tally {
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;

    void record(bool ok, const std::function<std::string()>& describe) {
        if (ok) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < 3) failures.push_back(describe());
    }
    void error(const std::string& what) {
        ++failed;
        if (failures.size() < 3) failures.push_back(what);
    }
    void into(Verdict& v, const std::string& label) const {
        v.add(label, std::to_string(passed) + " passed, " + std::to_string(failed) + " failed");
        for (const auto& f : failures) v.caveats.push_back(label + ": " + f);
    }
};

inline Verdict criterion(int n, const std::string& title, const std::string& citation) {
    Verdict v;
    v.operation = "criterion." + std::to_string(n);
    v.outcome = title;
    v.citation = citation;
    return v;
}

inline Verdict from_report(int n, const std::string& title, const std::string& citation, const Report& r,
                           const std::string& inputs) {
    Verdict v = criterion(n, title, citation);
    v.digest = digest(inputs);
    long ok = 0;
    for (const auto& x : r.verdicts) {
        if (x.passed) ++ok;
        else v.caveats.push_back(x.operation + ": " + x.outcome);
    }
    v.passed = r.passed();
    v.add("checks", std::to_string(ok) + "/" + std::to_string(r.verdicts.size()));
    return v;
}

inline Series sqrt_t(Field f) { return t_power(f, make_rational(1, 2)); }

/// (X^2 - t) as an element of K[X].
inline PolyK x2_minus_t(Field f) {
    return PolyK(f, {RatFunc::from_poly(TPoly::monomial(Scalar::from_integer(f, -1), 1)), RatFunc::zero(f),
                     RatFunc::integer(f, 1)});
}

/// Random exact polynomial over K of degree in [lo, hi] (nonzero).
inline PolyS k_poly(Sampler& rng, Field f, long lo, long hi) {
    long d = rng.uniform(lo, hi);
    return rng.poly(f, d, false, [&] { return rng.exact_coeff(f, 0, 3, 1, 3); });
}

/// Random polynomial over Khat with deep tails known to O(t^prec).
inline PolyS khat_poly(Sampler& rng, Field f, long lo, long hi, const Rational& prec, bool monic = false) {
    long d = rng.uniform(lo, hi);
    return rng.poly(f, d, monic, [&] { return rng.khat_coeff(f, prec); });
}

// -- criterion 4: valuation axioms -------------------------------------------

struct Family {
    std::string name;
    Field field;
    ValuationSpec spec;
};

inline std::vector<Family> axiom_families() {
    Field q = Field::rationals();
    Field f2 = Field::prime(2);
    AlgElement as = artin_schreier_center(2, 128);
    AlgElement root = attach_minpoly(sqrt_t(q), x2_minus_t(q), true);
    ValuationSpec key = ValuationSpec::keypoly(to_series_poly(x2_minus_t(q), 64), GroupVal::fin(5, 4),
                                               ValuationSpec::monomial(Series::zero(q), GroupVal::fin(1, 2)),
                                               PairOfDefinition{root, GroupVal::fin(3, 4)});
    return {
        {"Gauss", q, ValuationSpec::gauss()},
        {"Monomial(0, 1/3)", q, ValuationSpec::monomial(Series::zero(q), GroupVal::fin(1, 3))},
        {"Monomial(t^(1/2), 3/4)", q, ValuationSpec::monomial(root, GroupVal::fin(3, 4))},
        {"Monomial(a, (1, 0)) over F_2", f2, ValuationSpec::monomial(as, GroupVal::lex(1, 0))},
        {"KeyPoly(X^2 - t, 5/4)", q, key},
    };
}

inline Verdict valuation_axioms(std::uint64_t seed, long samples = 1000) {
    Verdict v = criterion(4, "valuation axioms on every spec family", "valuation axioms");
    v.digest = digest("axioms|" + std::to_string(seed) + "|" + std::to_string(samples));
    bool ok = true;
    long fam_index = 0;
    for (const auto& fam : axiom_families()) {
        Sampler rng(seed * 7919 + static_cast<std::uint64_t>(fam_index++));
        Tally mult, ultra;
        for (long s = 0; s < samples; ++s) {
            PolyS f = k_poly(rng, fam.field, 0, 3);
            PolyS g = k_poly(rng, fam.field, 0, 3);
            try {
                GroupVal ef = eval(fam.spec, f), eg = eval(fam.spec, g);
                GroupVal efg = eval(fam.spec, f * g);
                mult.record(efg == ef + eg, [&] { return f.str() + " ; " + g.str(); });
                PolyS sum = f + g;
                if (sum.is_zero()) {
                    ultra.record(true, {});
                    continue;
                }
                GroupVal es = eval(fam.spec, sum);
                GroupVal lo = min(ef, eg);
                bool good = es >= lo && (ef == eg || es == lo);
                ultra.record(good, [&] { return f.str() + " ; " + g.str(); });
            } catch (const Error& e) {
                mult.error(e.what());
            }
        }
        mult.into(v, fam.name + " multiplicativity");
        ultra.into(v, fam.name + " ultrametric");
        ok = ok && mult.failed == 0 && ultra.failed == 0;
    }
    v.passed = ok;
    return v;
}

// -- criterion 5: the two biconditionals ---------------------------------------

/// Product of linear factors X - b with b near `center` (plus noise), times a
/// random unit-ish constant. Noise exponents are drawn on the grid 1/den.
inline PolyS near_center_poly(Sampler& rng, Field f, const Series& center, long den, long max_noise_num,
                              long max_factors) {
    PolyS out = PolyS::constant(rng.exact_unit_like(f, 0, 1));
    long k = rng.uniform(1, max_factors);
    for (long j = 0; j < k; ++j) {
        Series b = Series::zero(f);
        // a truncation of the center
        // With an unknown tail, k factors at distance d need the center to O(t^(k*d)).
        long avail = 0;
        for (const auto& [key, c] : center.terms()) {
            if (!center.is_exact() && center.exponent_of(key) * max_factors >= center.prec().rational()) break;
            ++avail;
        }
        if (!center.is_exact() && avail > 0) --avail;
        long keep = rng.uniform(0, avail);
        long taken = 0;
        for (const auto& [key, c] : center.terms()) {
            if (taken++ >= keep) break;
            b = b + Series::monomial(c, center.exponent_of(key));
        }
        if (rng.coin()) b = b + Series::monomial(rng.nonzero_scalar(f), make_rational(rng.uniform(0, max_noise_num), den));
        out = out * PolyS::linear(b);
    }
    return out;
}

inline Verdict equivalence_suite(std::uint64_t seed, long samples = 500) {
    Verdict v = criterion(5, "v f = v_{a,gamma} f iff delta(f) <= gamma; v f = v_Q f iff delta(f) <= delta(Q)",
                          "comparison with a coarser monomial valuation; comparison with a key polynomial valuation");
    v.digest = digest("equivalence|" + std::to_string(seed) + "|" + std::to_string(samples));
    bool ok = true;
    Field q = Field::rationals();
    Field f2 = Field::prime(2);
    AlgElement as = artin_schreier_center(2, 128);

    struct Coarse {
        std::string name;
        Field field;
        AlgElement center;
        GroupVal gamma, fine;
        long den, noise;
    };
    std::vector<Coarse> coarse = {
        {"a = 0, gamma = 1/3 < 1/2", q, AlgElement::plain(Series::zero(q)), GroupVal::fin(1, 3), GroupVal::fin(1, 2), 6, 6},
        {"a = t^(1/2), gamma = 3/4 < 2", q, attach_minpoly(sqrt_t(q), x2_minus_t(q), true), GroupVal::fin(3, 4),
         GroupVal::fin(2), 4, 12},
        {"Artin-Schreier a, gamma = 4 < (1, 0)", f2, as, GroupVal::fin(4), GroupVal::lex(1, 0), 1, 20},
    };
    std::uint64_t salt = 0;
    for (const auto& c : coarse) {
        Sampler rng(seed * 104729 + salt++);
        ValuationSpec fine = ValuationSpec::monomial(c.center, c.fine);
        ValuationSpec rough = ValuationSpec::monomial(c.center, c.gamma);
        Tally t;
        long above = 0;
        for (long s = 0; s < samples; ++s) {
            PolyS f = near_center_poly(rng, c.field, c.center.expansion, c.den, c.noise, 3);
            try {
                GroupVal d = delta(fine, f);
                GroupVal vf = eval(fine, f), vr = eval(rough, f);
                bool eq = (vf == vr) == (d <= c.gamma);
                bool gt = (vf > vr) == (d > c.gamma);
                if (d > c.gamma) ++above;
                t.record(eq && gt, [&] { return f.str() + " delta " + d.str(); });
            } catch (const Error& e) {
                t.error(e.what());
            }
        }
        t.into(v, "coarser valuation, " + c.name);
        v.add("coarser valuation, " + c.name + ", samples with delta > gamma", std::to_string(above));
        ok = ok && t.failed == 0 && above > 0 && above < samples;
    }

    // Key polynomial families: (v, Q, vQ).
    {
        Sampler rng(seed * 104729 + salt++);
        Series center = sqrt_t(q) + t_power(q, 1);
        ValuationSpec vv = ValuationSpec::monomial(center, GroupVal::fin(2));
        PolyS qq = to_series_poly(x2_minus_t(q), 64);
        ValuationSpec vq = ValuationSpec::keypoly(qq, GroupVal::fin(3, 2), vv);
        GroupVal dq = delta(vv, qq);
        Tally t;
        long above = 0;
        for (long s = 0; s < samples; ++s) {
            PolyS f = PolyS::constant(rng.exact_unit_like(q, 0, 1));
            long factors = rng.uniform(1, 2);
            for (long j = 0; j < factors; ++j) {
                if (rng.coin()) {
                    // (X - u)^2 - t with u close to t
                    Series u = t_power(q, 1);
                    if (rng.coin()) u = u + Series::monomial(rng.nonzero_scalar(q), Rational(rng.uniform(1, 3)));
                    else u = rng.exact_coeff(q, 0, 2);
                    PolyS lin = PolyS::linear(u);
                    f = f * (lin * lin - PolyS::constant(t_power(q, 1)));
                } else {
                    f = f * PolyS::linear(rng.exact_coeff(q, 0, 2));
                }
            }
            try {
                GroupVal d = delta(vv, f);
                bool eq = (eval(vv, f) == eval(vq, f)) == (d <= dq);
                if (d > dq) ++above;
                t.record(eq, [&] { return f.str(); });
            } catch (const Error& e) {
                t.error(e.what());
            }
        }
        t.into(v, "key polynomial X^2 - t under Monomial(t^(1/2) + t, 2)");
        v.add("key polynomial X^2 - t, samples with delta(f) > delta(Q)", std::to_string(above));
        ok = ok && t.failed == 0 && above > 0 && above < samples;
    }
    {
        Sampler rng(seed * 104729 + salt++);
        auto gen = PcsGenerator::artin_schreier(2);
        ValuationSpec vv = ValuationSpec::monomial(as, GroupVal::lex(1, 0));
        PolyS qq = PolyS::linear(gen.element(2));
        GroupVal dq = delta(vv, qq);
        ValuationSpec vq = ValuationSpec::keypoly(qq, eval(vv, qq), vv);
        Tally t;
        long above = 0;
        for (long s = 0; s < samples; ++s) {
            PolyS f = PolyS::constant(rng.exact_unit_like(f2, 0, 1));
            long factors = rng.uniform(1, 3);
            for (long j = 0; j < factors; ++j) {
                Series b = gen.element(rng.uniform(0, 4));
                if (rng.coin()) b = b + Series::monomial(Scalar::one(f2), Rational(rng.uniform(0, 20)));
                f = f * PolyS::linear(b);
            }
            try {
                GroupVal d = delta(vv, f);
                bool eq = (eval(vv, f) == eval(vq, f)) == (d <= dq);
                if (d > dq) ++above;
                t.record(eq, [&] { return f.str(); });
            } catch (const Error& e) {
                t.error(e.what());
            }
        }
        t.into(v, "key polynomial X - a_2 under Monomial(a, (1, 0))");
        v.add("key polynomial X - a_2, samples with delta(f) > delta(Q)", std::to_string(above));
        ok = ok && t.failed == 0 && above > 0 && above < samples;
    }
    v.passed = ok;
    return v;
}

// -- criterion 6: pair equivalence ---------------------------------------------

inline Verdict pair_equivalence(std::uint64_t seed, long triples = 100, long polys = 50) {
    Verdict v = criterion(6, "equivalent centers define the same valuation; inequivalent ones are separated",
                          "uniqueness of the extension for equivalent pairs");
    v.digest = digest("pairs|" + std::to_string(seed));
    Sampler rng(seed * 15485863);
    Tally same, apart;
    for (long i = 0; i < triples; ++i) {
        Field f = i % 2 == 0 ? Field::rationals() : Field::prime(3);
        Series a = rng.exact_coeff(f, 0, 6, 2);
        GroupVal gamma = GroupVal::fin(rng.uniform(1, 8), 2);
        Series b = a;
        if (rng.uniform(0, 4) != 0)
            b = a + Series::monomial(rng.nonzero_scalar(f), gamma.rational() + make_rational(rng.uniform(0, 4), 2));
        std::vector<PolyS> samples;
        for (long s = 0; s < polys; ++s) {
            long d = rng.uniform(1, 3);
            samples.push_back(rng.poly(f, d, false, [&] { return rng.exact_coeff(f, 0, 4, 2); }));
        }
        try {
            UniquenessReport u = uniqueness_check({AlgElement::plain(a), gamma}, {AlgElement::plain(b), gamma}, samples);
            same.record(u.discrepancies.empty() && u.inconclusive == 0 && u.agreements == polys,
                        [&] { return "a = " + a.str() + ", b = " + b.str() + ": " + detail::join(u.discrepancies); });
        } catch (const Error& e) {
            same.error(e.what());
        }
    }
    for (long i = 0; i < triples; ++i) {
        Field f = i % 2 == 0 ? Field::rationals() : Field::prime(3);
        Series a = rng.exact_coeff(f, 0, 6, 2);
        GroupVal gamma = GroupVal::fin(rng.uniform(2, 8), 2);
        Rational e = make_rational(rng.uniform(0, to_long(floor_of(gamma.rational() * 2)) - 1), 2);
        Series b = a + Series::monomial(rng.nonzero_scalar(f), e);
        try {
            bool equivalent = is_pair_equivalent(a, b, gamma);
            PolyS disc = PolyS::linear(b);
            GroupVal va = eval(ValuationSpec::monomial(a, gamma), disc);
            GroupVal vb = eval(ValuationSpec::monomial(b, gamma), disc);
            apart.record(!equivalent && !(va == vb),
                         [&] { return "a = " + a.str() + ", b = " + b.str() + ": " + va.str() + " vs " + vb.str(); });
        } catch (const Error& ex) {
            apart.error(ex.what());
        }
    }
    same.into(v, "equivalent triples");
    apart.into(v, "inequivalent triples separated by X - b");
    v.passed = same.failed == 0 && apart.failed == 0;
    return v;
}

// -- criterion 7: density ------------------------------------------------------

inline Verdict density_suite(std::uint64_t seed, long samples = 100, long pcs_samples = 25) {
    Verdict v = criterion(7, "density approximation with all postconditions re-verified",
                          "density of K(X) in the completion; density obstruction");
    v.digest = digest("density|" + std::to_string(seed));
    Field q = Field::rationals();
    Rational prec = 64;
    bool ok = true;
    struct Case {
        std::string name;
        ValuationSpec spec;
        long n;
    };
    std::vector<Case> cases = {
        {"Gauss", ValuationSpec::gauss(FieldTag::OverKhat), samples},
        {"Monomial(t^(1/2), 3/4)", ValuationSpec::monomial(sqrt_t(q), GroupVal::fin(3, 4), FieldTag::OverKhat), samples},
        {"mixed-radix(2,3) limit", ValuationSpec::pcs_limit(PcsGenerator::mixed_radix(2, 3)), pcs_samples},
    };
    std::uint64_t salt = 0;
    for (const auto& c : cases) {
        Sampler rng(seed * 32452843 + salt++);
        Tally t;
        for (long s = 0; s < c.n; ++s) {
            PolyS f = khat_poly(rng, q, 0, 2, prec);
            PolyS g = khat_poly(rng, q, 0, 2, prec);
            GroupVal alpha = GroupVal::fin(rng.uniform(1, 8));
            try {
                DensityResult d = approximate_density(f, g, alpha, c.spec);
                // independent re-check of the outputs
                auto again = verify_density(f, g, to_series_poly(d.f, prec), to_series_poly(d.g, prec), alpha, c.spec);
                t.record(all_passed(again) && all_passed(d.checks), [&] {
                    std::string bad;
                    for (const auto& x : again)
                        if (!x.passed) bad += x.name + " (" + x.detail + ") ";
                    return f.str() + " / " + g.str() + ": " + bad;
                });
            } catch (const Error& e) {
                t.error(std::string(e.what()) + " on " + f.str() + " / " + g.str());
            }
        }
        t.into(v, c.name);
        ok = ok && t.failed == 0;
    }
    // The two obstructed kinds must refuse with the reason attached.
    std::vector<std::pair<std::string, ValuationSpec>> refused = {
        {"Monomial(t^(1/2), (1, 0))", ValuationSpec::monomial(sqrt_t(q), GroupVal::lex(1, 0))},
        {"exponential limit", ValuationSpec::pcs_limit(PcsGenerator::exponential())},
    };
    for (const auto& [name, spec] : refused) {
        std::string outcome = "no error";
        bool good = false;
        try {
            approximate_density(PolyS::x(q), PolyS::constant(Series::integer(q, 1)), GroupVal::fin(3), spec);
        } catch (const UnsupportedKind& e) {
            outcome = e.what();
            good = outcome.find("density obstruction") != std::string::npos;
        } catch (const Error& e) {
            outcome = e.what();
        }
        v.add(name, outcome);
        ok = ok && good;
    }
    v.passed = ok;
    return v;
}

// -- criterion 8: same-delta approximation -------------------------------------

inline Verdict same_delta_suite(std::uint64_t seed, long samples = 100) {
    Verdict v = criterion(8, "same-delta approximation keeps degree, value and delta",
                          "approximation preserving delta");
    v.digest = digest("same-delta|" + std::to_string(seed));
    Field q = Field::rationals();
    Rational prec = 128;
    Sampler rng(seed * 49979687);
    std::vector<std::pair<std::string, ValuationSpec>> specs = {
        {"Gauss", ValuationSpec::gauss(FieldTag::OverKhat)},
        {"Monomial(t^(1/2), 3/4)", ValuationSpec::monomial(sqrt_t(q), GroupVal::fin(3, 4), FieldTag::OverKhat)},
    };
    Tally t;
    for (long s = 0; s < samples; ++s) {
        const auto& [name, spec] = specs[static_cast<std::size_t>(s % 2)];
        PolyS f = khat_poly(rng, q, 1, 3, prec, true);
        try {
            GroupVal d = delta(spec, f);
            GroupVal alpha = GroupVal::fin(floor_plus_one(d.rational()) + rng.uniform(0, f.degree() < 3 ? 1 : 0));
            if (sgn(alpha.rational()) <= 0) alpha = GroupVal::fin(1);
            SameDeltaResult r = approximate_same_delta(f, alpha, spec);
            auto again = verify_same_delta(f, to_series_poly(r.f, prec), spec);
            t.record(all_passed(again), [&] { return name + ": " + f.str(); });
        } catch (const Error& e) {
            t.error(name + ": " + e.what() + " on " + f.str());
        }
    }
    t.into(v, "samples");
    v.passed = t.failed == 0;
    return v;
}

// -- criterion 9: continuity of roots --------------------------------------------

inline Verdict continuity_suite(std::uint64_t seed, long samples = 50) {
    Verdict v = criterion(9, "perturbations above the threshold keep the root data",
                          "continuity of roots");
    v.digest = digest("continuity|" + std::to_string(seed));
    Field q = Field::rationals();
    Sampler rng(seed * 86028121);
    Tally poly_t, pair_t;
    for (long s = 0; s < samples; ++s) {
        long n = rng.uniform(1, 3);
        std::vector<long> exps = {0, 1, 2, 3};
        for (long i = 3; i > 0; --i) std::swap(exps[static_cast<std::size_t>(i)], exps[static_cast<std::size_t>(rng.uniform(0, i))]);
        PolyS f = PolyS::constant(Series::integer(q, 1));
        std::vector<Series> roots;
        long top = 0;
        for (long j = 0; j < n; ++j) {
            long e = exps[static_cast<std::size_t>(j)];
            top = std::max(top, e);
            Series r = Series::monomial(rng.nonzero_scalar(q), Rational(e));
            if (rng.coin()) r = r + Series::monomial(rng.nonzero_scalar(q), Rational(e + 1));
            roots.push_back(r);
            f = f * PolyS::linear(r);
        }
        GroupVal alpha = GroupVal::fin(top + 1);
        try {
            Rational thr = roots_matching_threshold(f, alpha).rational();
            long cut = to_long(floor_plus_one(thr)) + rng.uniform(0, 3);
            std::vector<Series> eps;
            for (long i = 0; i < n; ++i)
                eps.push_back(rng.coin() ? Series::monomial(rng.nonzero_scalar(q), Rational(cut + rng.uniform(0, 2)))
                                         : Series::zero(q));
            eps.push_back(Series::zero(q));
            PolyS fp = f + PolyS(q, eps);
            RootMatching m = verify_root_matching(f, fp, alpha, roots);
            bool exact = newton_polygon(f, Series::zero(q)) == newton_polygon(fp, Series::zero(q));
            poly_t.record(m.applicable && m.polygons_agree && exact, [&] { return f.str() + " -> " + fp.str(); });
        } catch (const Error& e) {
            poly_t.error(e.what());
        }
    }
    // Pre-factored fixtures over the algebraic closure.
    std::vector<std::vector<Series>> fixtures = {
        {sqrt_t(q), -sqrt_t(q)},
        {t_power(q, 1), Series::integer(q, 2) * t_power(q, 1)},
        {Series::integer(q, 1), t_power(q, 1), t_power(q, 2)},
        {t_power(q, make_rational(1, 3)), t_power(q, 1)},
        {Series::integer(q, 1) + sqrt_t(q), Series::integer(q, 1) - sqrt_t(q)},
        {t_power(q, make_rational(1, 2)) + t_power(q, 1), t_power(q, make_rational(3, 2))},
        {Series::integer(q, 3), Series::integer(q, -1), t_power(q, 3)},
        {t_power(q, make_rational(2, 3)), -t_power(q, make_rational(2, 3))},
        {Series::zero(q) + t_power(q, 4), Series::integer(q, 1) + t_power(q, 4)},
        {t_power(q, 1) + t_power(q, 2), t_power(q, 1) - t_power(q, 2), Series::integer(q, 5)},
    };
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const auto& z = fixtures[i];
        PolyS f = PolyS::constant(Series::integer(q, 1));
        for (const auto& r : z) f = f * PolyS::linear(r);
        GroupVal alpha = GroupVal::fin(3);
        try {
            Rational thr = roots_matching_threshold(f, alpha).rational();
            long cut = to_long(floor_plus_one(thr)) + 1;
            std::vector<Series> zp;
            PolyS fp = PolyS::constant(Series::integer(q, 1));
            for (std::size_t j = 0; j < z.size(); ++j) {
                Series r = z[j] + Series::monomial(rng.nonzero_scalar(q), Rational(cut + static_cast<long>(j)));
                zp.push_back(r);
                fp = fp * PolyS::linear(r);
            }
            // Listed in reverse so that the pairing has to be found.
            std::vector<Series> rev(zp.rbegin(), zp.rend());
            RootMatching m = verify_root_matching(f, fp, alpha, z, z, rev);
            pair_t.record(m.applicable && m.polygons_agree && m.roots_paired.value_or(false),
                          [&] { return "fixture " + std::to_string(i) + ": " + m.detail; });
        } catch (const Error& e) {
            pair_t.error("fixture " + std::to_string(i) + ": " + e.what());
        }
    }
    poly_t.into(v, "random monic perturbations");
    pair_t.into(v, "pre-factored fixtures");
    v.passed = poly_t.failed == 0 && pair_t.failed == 0;
    return v;
}

// -- criterion 10: conjugacy -------------------------------------------------------

inline Verdict conjugacy_suite() {
    Verdict v = criterion(10, "twisted centers are conjugate and classify identically",
                          "conjugate minimal pairs over the completion");
    v.digest = digest("conjugacy");
    Field q = Field::rationals();
    Field f7 = Field::prime(7);
    PolyK x3(f7, {RatFunc::from_poly(TPoly::monomial(Scalar::from_integer(f7, -1), 1)), RatFunc::zero(f7),
                  RatFunc::zero(f7), RatFunc::integer(f7, 1)});
    struct Fixture {
        std::string name;
        AlgElement a;
        GroupVal gamma;
        long m;
        Series expected;
    };
    std::vector<Fixture> fx = {
        {"t^(1/2) over Q, m = 1", attach_minpoly(sqrt_t(q), x2_minus_t(q), true), GroupVal::fin(3, 4), 1, -sqrt_t(q)},
        {"t^(1/3) over F_7, m = 1", attach_minpoly(t_power(f7, make_rational(1, 3)), x3, true), GroupVal::fin(1, 2), 1,
         Series::monomial(Scalar::from_integer(f7, 2), make_rational(1, 3))},
        {"t^(1/3) over F_7, m = 2", attach_minpoly(t_power(f7, make_rational(1, 3)), x3, true), GroupVal::fin(1, 2), 2,
         Series::monomial(Scalar::from_integer(f7, 4), make_rational(1, 3))},
    };
    bool ok = true;
    for (const auto& x : fx) {
        try {
            ConjugacyReport r = conjugacy_check(x.a, x.gamma, x.m);
            bool good = r.shares_minpoly && r.same_kind && r.same_value && r.twisted.expansion == x.expected;
            v.add(x.name, r.twisted.expansion.str() + ", " + to_string(r.kind) + " / " + to_string(r.twisted_kind));
            ok = ok && good;
        } catch (const Error& e) {
            v.add(x.name, e.what());
            ok = false;
        }
    }
    v.passed = ok;
    return v;
}

/// Criteria 1-10.
inline Report core_suite(std::uint64_t seed, const WorkbenchConfig& base) {
    Report r;
    WorkbenchConfig cfg = base;
    cfg.seed = seed;
    {
        Report ex = example_artin_schreier(2, cfg);
        ex.append(example_artin_schreier(3, cfg));
        r.add(from_report(1, "Artin-Schreier example for p = 2 and p = 3", "unique pair of definition", ex,
                          "6.1|" + std::to_string(seed)));
    }
    r.add(from_report(2, "exponential example", "valuation algebraic of type II", example_exponential(cfg),
                      "6.2|" + std::to_string(seed)));
    r.add(from_report(3, "mixed-radix example (2, 3)", "valuation algebraic of type I",
                      example_mixed_radix(2, 3, cfg), "6.3|" + std::to_string(seed)));
    r.add(valuation_axioms(seed));
    r.add(equivalence_suite(seed));
    r.add(pair_equivalence(seed));
    r.add(density_suite(seed));
    r.add(same_delta_suite(seed));
    r.add(continuity_suite(seed));
    r.add(conjugacy_suite());
    return r;
}

}  // namespace suite

/// The acceptance suite. Criterion 11 reruns criteria 1-10 and compares the
/// structured output byte for byte.
inline Report run_selftest(const WorkbenchConfig& cfg) {
    Report first = suite::core_suite(cfg.seed, cfg);
    Report second = suite::core_suite(cfg.seed, cfg);
    std::string a = first.structured(), b = second.structured();
    Verdict v = suite::criterion(11, "identical seeds give byte-identical structured reports", "plumbing");
    v.digest = digest("determinism|" + std::to_string(cfg.seed));
    v.passed = a == b && Report::parse_structured(a) == first;
    v.add("report digest (run 1)", digest(a));
    v.add("report digest (run 2)", digest(b));
    first.add(v);
    return first;
}

}  // namespace valwb
