#pragma once

#include <string>
#include <vector>

#include "valwb/config.hpp"
#include "valwb/lifting.hpp"
#include "valwb/report.hpp"
#include "valwb/sampling.hpp"

namespace valwb {

namespace detail {

inline Integer ipow(long b, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

/// Run `body`, turning any workbench error into a failed verdict.
template <typename Body>
Verdict guarded(const std::string& op, const std::string& inputs, const std::string& citation, Body&& body) {
    Verdict v;
    v.operation = op;
    v.digest = digest(op + "|" + inputs);
    v.citation = citation;
    try {
        body(v);
    } catch (const Error& e) {
        v.passed = false;
        v.outcome = std::string("error: ") + e.what();
    }
    return v;
}

inline std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

}  // namespace detail

/// Artin-Schreier limit a = sum t^(p^n) over F_p with its minimal polynomial
/// X^p - X + t, known to precision `prec`.
inline AlgElement artin_schreier_center(long p, const Rational& prec) {
    Field f = Field::prime(static_cast<std::uint64_t>(p));
    std::vector<std::pair<Rational, Scalar>> terms;
    for (Integer e = 1; Rational(e) < prec; e *= p) terms.emplace_back(Rational(e), Scalar::one(f));
    Series a = Series::from_terms(f, terms, GroupVal::fin(prec));
    std::vector<RatFunc> c(static_cast<std::size_t>(p) + 1, RatFunc::zero(f));
    c[0] = RatFunc::from_poly(TPoly::monomial(Scalar::one(f), 1));
    c[1] = RatFunc::integer(f, -1);
    c[static_cast<std::size_t>(p)] = RatFunc::integer(f, 1);
    // An Artin-Schreier polynomial with a root outside K is irreducible.
    return attach_minpoly(a, PolyK(f, std::move(c)), true);
}

/// The Artin-Schreier example for a prime p.
inline Report example_artin_schreier(long p, const WorkbenchConfig& cfg) {
    Report r;
    const std::string in = "p=" + std::to_string(p) + ";prec=" + cfg.precision.get_str() + ";seed=" +
                           std::to_string(cfg.seed);
    Field f = Field::prime(static_cast<std::uint64_t>(p));
    // The center must be known past p^6 so that delta(X - a_5) is decidable.
    Rational center_prec = std::max(cfg.precision, Rational(detail::ipow(p, 7) + 1));
    AlgElement a = artin_schreier_center(p, center_prec);
    auto gen = PcsGenerator::artin_schreier(p, std::max(cfg.horizon, 8L));
    ValuationSpec spec = ValuationSpec::monomial(a, GroupVal::lex(1, 0));
    LiftingContext ctx = cfg.context();
    PolyS qa = to_series_poly(*a.minpoly, cfg.precision);

    r.add(detail::guarded("example.artin-schreier.delta", in, "delta(X - a_m) = v(a - a_m) = p^(m+1)", [&](Verdict& v) {
        bool ok = true;
        for (long m = 0; m <= 5; ++m) {
            GroupVal d = delta(spec, PolyS::linear(gen.element(m)));
            GroupVal want = GroupVal::fin(Rational(detail::ipow(p, m + 1)));
            ok = ok && d == want;
            v.add("delta(Q_" + std::to_string(m) + ")", d.str() + (d == want ? "" : " expected " + want.str()));
        }
        v.passed = ok;
        v.outcome = ok ? "delta(Q_m) = p^(m+1) for m = 0..5" : "delta table mismatch";
    }));

    r.add(detail::guarded("example.artin-schreier.classify", in, "unique pair of definition", [&](Verdict& v) {
        Classification c = classify_extension(spec, ctx);
        v.passed = c.kind == ExtensionKind::ValueTranscendentalUniquePair;
        v.outcome = to_string(c.kind);
        v.add("reason", c.report);
        MinimalPairVerdict mp = minimal_pair_search(a, GroupVal::lex(1, 0));
        v.add("minimal pair search", mp.smaller_found ? "smaller center " + mp.smaller.str() : "none smaller found");
        v.passed = v.passed && !mp.smaller_found;
    }));

    Series root;
    r.add(detail::guarded("example.artin-schreier.completion-root", in, "the center lies in the completion",
                          [&](Verdict& v) {
                              CompletionRoot cr = minpoly_over_completion(a, cfg.precision);
                              v.add("note", cr.note);
                              if (!cr.found) {
                                  v.passed = false;
                                  v.outcome = "no root found";
                                  return;
                              }
                              root = cr.root;
                              Series diff = cr.root - a.expansion;
                              bool match = diff.is_unknown_zero() && diff.prec() >= GroupVal::fin(cfg.precision) &&
                                           cr.root.prec() >= GroupVal::fin(cfg.precision);
                              v.passed = match;
                              v.outcome = "linear factor X - a over the completion";
                              v.add("root", cr.root.str());
                          }));

    std::vector<CskpEntry> base;
    for (long m = 0; m <= 5; ++m) {
        PolyS q = PolyS::linear(gen.element(m));
        base.push_back({q, delta(spec, q)});
    }
    CskpSeq without_qa(base);
    std::vector<CskpEntry> with_qa = base;
    with_qa.push_back({qa, delta(spec, qa)});
    CskpSeq seq(with_qa);

    LiftResult lifted{seq, ExtensionKind::ResidueTranscendental, "", {}};
    r.add(detail::guarded("example.artin-schreier.lift", in, "lifting a complete sequence with a unique pair",
                          [&](Verdict& v) {
                              lifted = lift_cskp(seq, spec, ctx);
                              const auto& e = lifted.seq.entries();
                              bool ok = e.size() == base.size() + 1;
                              for (std::size_t i = 0; ok && i < base.size(); ++i) ok = e[i].q == base[i].q;
                              ok = ok && e.back().q.degree() == 1 && !root.is_exact_zero() &&
                                   e.back().q == PolyS::linear(root);
                              v.passed = ok && lifted.warnings.empty();
                              v.outcome = ok ? "X^p - X + t replaced by X - a" : "unexpected lifted sequence";
                              v.add("last key polynomial", e.back().q.str());
                              for (const auto& w : lifted.warnings) v.caveats.push_back(w);
                          }));

    r.add(detail::guarded("example.artin-schreier.cskp", in, "complete sequences of key polynomials",
                          [&](Verdict& v) {
                              Sampler rng(cfg.seed * 1000003 + static_cast<std::uint64_t>(p));
                              long witnessed = 0, witnessed_lifted = 0;
                              const long n = 200;
                              for (long s = 0; s < n; ++s) {
                                  long deg = rng.uniform(0, p - 1);
                                  PolyS fs = rng.poly(f, deg, false, [&] { return rng.khat_coeff(f, cfg.precision); });
                                  if (cskp_check(without_qa, fs, spec).found) ++witnessed;
                                  if (cskp_check(lifted.seq, fs, spec).found) ++witnessed_lifted;
                              }
                              CskpWitness self = cskp_check(without_qa, qa, spec);
                              v.add("witnessed (sequence without Q_a)", std::to_string(witnessed) + "/" + std::to_string(n));
                              v.add("witnessed (lifted sequence)", std::to_string(witnessed_lifted) + "/" + std::to_string(n));
                              v.add("Q_a against {X - a_m}", self.found ? "witness " + std::to_string(self.index) : "no witness");
                              v.passed = witnessed == n && witnessed_lifted == n && !self.found;
                              v.outcome = v.passed ? "every sampled f of degree < p has a witness" : "missing witnesses";
                          }));
    return r;
}

/// The exponential example over Q.
inline Report example_exponential(const WorkbenchConfig& cfg) {
    Report r;
    const std::string in = "prec=" + cfg.precision.get_str();
    Field f = Field::rationals();
    auto gen = PcsGenerator::exponential(std::max(cfg.horizon, 14L));
    ValuationSpec spec = ValuationSpec::pcs_limit(gen, cfg.window);
    LiftingContext ctx = cfg.context();

    r.add(detail::guarded("example.exponential.delta", in, "delta(Q_m) = m + 1 = v(a_m - a_{m+1})", [&](Verdict& v) {
        auto gammas = validate_generator(gen);
        bool ok = true;
        for (long m = 0; m <= 10; ++m) {
            GroupVal d = delta(spec, PolyS::linear(gen.element(m)));
            ok = ok && d == GroupVal::fin(m + 1) && gammas[static_cast<std::size_t>(m)] == GroupVal::fin(m + 1);
            v.add("delta(Q_" + std::to_string(m) + ")", d.str());
        }
        v.passed = ok;
        v.outcome = ok ? "delta(Q_m) = m + 1 for m = 0..10" : "delta table mismatch";
    }));

    r.add(detail::guarded("example.exponential.classify", in, "valuation algebraic of type II", [&](Verdict& v) {
        Classification c = classify_extension(spec, ctx);
        v.passed = c.kind == ExtensionKind::ValuationAlgebraicTypeII;
        v.outcome = to_string(c.kind);
        v.add("reason", c.report);
    }));

    Series limit;
    r.add(detail::guarded("example.exponential.induce", in, "induced extension with a limit center", [&](Verdict& v) {
        Induced ind = induce(spec, ctx);
        bool ok = ind.spec.is_monomial() && ind.spec.as_monomial().gamma == GroupVal::lex(1, 0) &&
                  ind.spec.tag() == FieldTag::OverKhat;
        if (ok) {
            limit = ind.spec.as_monomial().center.expansion;
            Series expected = gen.element(to_long(floor_of(cfg.precision)) + 1).with_prec(GroupVal::fin(cfg.precision));
            ok = limit == expected && is_limit(limit, gen);
        }
        v.passed = ok;
        v.outcome = ind.spec.str();
        v.add("note", ind.note);
    }));

    r.add(detail::guarded("example.exponential.lift", in, "lifting a complete sequence of a Cauchy limit",
                          [&](Verdict& v) {
                              std::vector<PolyS> qs;
                              for (long m = 0; m <= 10; ++m) qs.push_back(PolyS::linear(gen.element(m)));
                              CskpSeq seq = CskpSeq::from_polys(qs, spec);
                              LiftResult lr = lift_cskp(seq, spec, ctx);
                              const auto& e = lr.seq.entries();
                              bool ok = e.size() == qs.size() + 1;
                              for (std::size_t i = 0; ok && i < qs.size(); ++i) ok = e[i].q == qs[i];
                              ok = ok && e.back().q == PolyS::linear(limit);
                              v.passed = ok;
                              v.outcome = ok ? "{X - a_m} extended by X - a" : "unexpected lifted sequence";
                              v.add("last key polynomial", e.back().q.str());
                          }));
    (void)f;
    return r;
}

/// The mixed-radix example over Q with primes p < q.
inline Report example_mixed_radix(long p, long q, const WorkbenchConfig& cfg) {
    Report r;
    const std::string in = "p=" + std::to_string(p) + ";q=" + std::to_string(q) + ";ram_cap=" + std::to_string(cfg.ram_cap);
    auto gen = PcsGenerator::mixed_radix(p, q, std::max(cfg.horizon, 12L));
    ValuationSpec spec = ValuationSpec::pcs_limit(gen, cfg.window);
    LiftingContext ctx = cfg.context();

    r.add(detail::guarded("example.mixed-radix.gamma", in, "gamma_m = q^(m+1) / p^(m+1)", [&](Verdict& v) {
        auto gammas = validate_generator(gen);
        bool ok = true;
        for (long m = 0; m <= 8; ++m) {
            Rational want(detail::ipow(q, m + 1), detail::ipow(p, m + 1));
            want.canonicalize();
            ok = ok && gammas[static_cast<std::size_t>(m)] == GroupVal::fin(want);
            v.add("gamma_" + std::to_string(m), gammas[static_cast<std::size_t>(m)].str());
        }
        v.passed = ok;
        v.outcome = ok ? "gamma_m = q^(m+1)/p^(m+1) for m = 0..8" : "gamma mismatch";
    }));

    r.add(detail::guarded("example.mixed-radix.classify", in, "valuation algebraic of type I", [&](Verdict& v) {
        Classification c = classify_extension(spec, ctx);
        v.passed = c.kind == ExtensionKind::ValuationAlgebraicTypeI && c.generator &&
                   c.generator->criterion == "unbounded-denominators";
        v.outcome = to_string(c.kind);
        v.add("criterion", c.generator ? c.generator->criterion : "");
        v.add("reason", c.report);
        v.caveats.push_back("transcendental-type evidence is read off a finite prefix");
    }));

    r.add(detail::guarded("example.mixed-radix.lift", in, "type I sequences lift unchanged", [&](Verdict& v) {
        std::vector<PolyS> qs;
        for (long m = 0; m <= 5; ++m) qs.push_back(PolyS::linear(gen.element(m)));
        CskpSeq seq = CskpSeq::from_polys(qs, spec);
        LiftResult lr = lift_cskp(seq, spec, ctx);
        Induced ind = induce(spec, ctx);
        bool ok = lr.seq.size() == seq.size();
        for (std::size_t i = 0; ok && i < seq.size(); ++i)
            ok = lr.seq[i].q == seq[i].q && lr.seq[i].delta == seq[i].delta;
        ok = ok && ind.spec.is_pcs_limit() && ind.spec.tag() == FieldTag::OverKhat;
        v.passed = ok;
        v.outcome = ok ? "lifted sequence equals the input" : "lifted sequence differs";
        v.add("induced", ind.spec.str());
    }));
    return r;
}

/// Dispatch by example id "6.1", "6.2" or "6.3".
inline Report run_example(const std::string& id, long p, long q, const WorkbenchConfig& cfg) {
    if (id == "6.1") return example_artin_schreier(p == 0 ? 2 : p, cfg);
    if (id == "6.2") return example_exponential(cfg);
    if (id == "6.3") {
        long pp = p == 0 ? 2 : p, qq = q == 0 ? 3 : q;
        return example_mixed_radix(pp, qq, cfg);
    }
    throw DomainError("unknown example '" + id + "' (expected 6.1, 6.2 or 6.3)");
}

}  // namespace valwb
