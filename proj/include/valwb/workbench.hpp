#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "valwb/config.hpp"
#include "valwb/examples.hpp"
#include "valwb/report.hpp"
#include "valwb/selftest.hpp"

namespace valwb {

enum class OutputFormat { Text, Structured };

/// Parsed command line. Filled by the CLI front end.
struct CliOptions {
    std::string command;
    std::string example_id;
    std::optional<std::string> config;
    std::optional<std::string> prec;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    OutputFormat format = OutputFormat::Text;

    std::optional<std::string> poly;
    std::vector<std::string> keys;
    std::optional<std::string> f, g, alpha;
    std::optional<std::string> generator;
    std::optional<std::string> center, minpoly;
    std::optional<long> p, q;
};

inline const std::vector<std::string>& cli_commands() {
    static const std::vector<std::string> c = {"eval",  "delta",      "classify",  "induce",       "cskp-check",
                                               "lift-cskp", "density", "same-delta", "threshold", "pcs-classify",
                                               "kras",  "example",    "selftest"};
    return c;
}

namespace detail {

inline const std::string& need(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw InvalidSpec(std::string("missing required flag ") + flag);
    return *v;
}

inline const ValuationSpec& need_spec(const WorkbenchConfig& cfg) {
    if (!cfg.spec) throw InvalidSpec("the config has no 'spec'");
    return *cfg.spec;
}

inline std::string checks_outcome(const std::vector<Check>& checks) {
    long ok = 0;
    for (const auto& c : checks) ok += c.passed ? 1 : 0;
    return std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks passed";
}

inline void add_checks(Verdict& v, const std::vector<Check>& checks) {
    for (const auto& c : checks) v.add("check " + c.name, std::string(c.passed ? "ok" : "FAILED") + ": " + c.detail);
    v.passed = all_passed(checks);
}

inline WorkbenchConfig load_config(const CliOptions& o) {
    std::optional<Rational> prec;
    if (o.prec) {
        prec = parse_rational(*o.prec);
        if (sgn(*prec) <= 0) throw DomainError("--prec must be positive");
    }
    WorkbenchConfig cfg;
    if (o.config) {
        cfg = config_from_file(*o.config, prec);
    } else {
        cfg.precision = prec ? *prec : WorkbenchConfig::default_precision();
    }
    if (o.seed) cfg.seed = *o.seed;
    return cfg;
}

inline Report dispatch(const CliOptions& o, const WorkbenchConfig& cfg) {
    const std::string& cmd = o.command;
    if (cmd == "selftest") return run_selftest(cfg);
    if (cmd == "example") {
        if (o.example_id.empty()) throw InvalidSpec("example needs an id: 6.1, 6.2 or 6.3");
        return run_example(o.example_id, o.p.value_or(0), o.q.value_or(0), cfg);
    }

    Report r;
    Verdict v;
    v.operation = cmd;
    std::string inputs = cmd + "|" + cfg.source + "|prec=" + cfg.precision.get_str();
    auto with = [&](const char* k, const std::optional<std::string>& s) {
        if (s) inputs += std::string("|") + k + "=" + *s;
    };
    with("poly", o.poly);
    for (const auto& k : o.keys) inputs += "|key=" + k;
    with("f", o.f);
    with("g", o.g);
    with("alpha", o.alpha);
    with("generator", o.generator);
    with("center", o.center);
    with("minpoly", o.minpoly);
    v.digest = digest(inputs);
    const Field f = cfg.field;
    const Rational& prec = cfg.precision;

    if (cmd == "eval" || cmd == "delta") {
        const auto& spec = need_spec(cfg);
        PolyS p = parse_poly(need(o.poly, "--poly"), f, prec);
        GroupVal val = cmd == "eval" ? eval(spec, p) : delta(spec, p);
        v.outcome = val.str();
        v.citation = cmd == "eval" ? "valuation of a polynomial" : "delta as the largest root distance";
        v.add("spec", spec.str()).add("value", val.to_json().dump());
    } else if (cmd == "classify") {
        Classification c = classify_extension(need_spec(cfg), cfg.context());
        v.outcome = to_string(c.kind);
        v.citation = c.citation;
        v.add("reason", c.report);
        if (c.generator) v.add("sequence", c.generator->report);
    } else if (cmd == "induce") {
        Induced ind = induce(need_spec(cfg), cfg.context());
        v.outcome = ind.spec.str();
        v.citation = "induced extension to the completion";
        v.add("over", to_string(ind.spec.tag())).add("note", ind.note);
    } else if (cmd == "cskp-check" || cmd == "lift-cskp") {
        const auto& spec = need_spec(cfg);
        std::vector<PolyS> qs;
        for (const auto& k : o.keys) qs.push_back(parse_poly(k, f, prec));
        if (qs.empty()) throw InvalidSpec("at least one --key is required");
        CskpSeq seq = CskpSeq::from_polys(qs, spec);
        if (cmd == "cskp-check") {
            PolyS p = parse_poly(need(o.poly, "--poly"), f, prec);
            CskpWitness w = cskp_check(seq, p, spec);
            v.citation = "complete sequences of key polynomials";
            v.passed = w.found;
            v.outcome = w.found ? "witness at index " + std::to_string(w.index) : "no witness";
        } else {
            LiftResult lr = lift_cskp(seq, spec, cfg.context());
            v.citation = "lifting complete sequences to the completion";
            v.outcome = to_string(lr.kind) + ": " + std::to_string(lr.seq.entries().size()) + " key polynomials";
            v.add("note", lr.note);
            for (const auto& e : lr.seq.entries()) v.add("key", e.q.str() + " ; delta = " + e.delta.str());
            for (const auto& w : lr.warnings) v.caveats.push_back(w);
        }
    } else if (cmd == "density") {
        const auto& spec = need_spec(cfg);
        PolyS pf = parse_poly(need(o.f, "--f"), f, prec);
        PolyS pg = parse_poly(need(o.g, "--g"), f, prec);
        GroupVal alpha = parse_group_val(need(o.alpha, "--alpha"));
        DensityResult d = approximate_density(pf, pg, alpha, spec);
        v.citation = kDensityCitation;
        v.outcome = checks_outcome(d.checks);
        v.add("f'", d.f.str()).add("g'", d.g.str()).add("beta", d.beta.get_str()).add("cutoff", d.cutoff.get_str());
        if (d.nu >= 0) v.add("nu", std::to_string(d.nu));
        add_checks(v, d.checks);
    } else if (cmd == "same-delta") {
        const auto& spec = need_spec(cfg);
        PolyS p = parse_poly(need(o.poly, "--poly"), f, prec);
        GroupVal alpha = parse_group_val(need(o.alpha, "--alpha"));
        SameDeltaResult s = approximate_same_delta(p, alpha, spec);
        v.citation = "approximation preserving delta";
        v.outcome = checks_outcome(s.checks);
        v.add("f'", s.f.str()).add("threshold", s.threshold.get_str()).add("cutoff", s.cutoff.get_str());
        add_checks(v, s.checks);
    } else if (cmd == "threshold") {
        PolyS p = parse_poly(need(o.poly, "--poly"), f, prec);
        GroupVal alpha = parse_group_val(need(o.alpha, "--alpha"));
        GroupVal t = roots_matching_threshold(p, alpha);
        v.citation = "continuity of roots";
        v.outcome = t.str();
        v.add("threshold", t.to_json().dump());
    } else if (cmd == "pcs-classify") {
        PcsGenerator gen = PcsGenerator::parse(need(o.generator, "--generator"), cfg.horizon);
        GeneratorClass c = classify_generator(gen, prec, cfg.ram_cap);
        bool cauchy = c.verdict == GeneratorClass::Verdict::CauchyWithLimit;
        v.citation = cauchy ? "Cauchy sequences converge in the completion" : "sequences of transcendental type";
        v.outcome = cauchy ? "CauchyWithLimit" : "TranscendentalTypeEvidence";
        v.add("generator", gen.name()).add("report", c.report);
        if (cauchy) v.add("limit", c.limit.str());
        else v.add("criterion", c.criterion);
        v.add("materialized", std::to_string(c.materialized));
    } else if (cmd == "kras") {
        Series c = parse_series(need(o.center, "--center"), f, prec);
        AlgElement a = attach_minpoly(c, parse_poly_k(need(o.minpoly, "--minpoly"), f));
        GroupVal k = krasner_constant(a);
        v.citation = "Krasner constant";
        v.outcome = k.str();
        try {
            GroupVal byc = krasner_constant_conjugates(a);
            GroupVal byp = krasner_constant_polygon(a);
            v.add("from conjugates", byc.str()).add("from Newton polygon", byp.str());
            v.passed = byc == byp;
        } catch (const Error& e) {
            v.caveats.push_back(e.what());
        }
    } else {
        throw InvalidSpec("unknown subcommand '" + cmd + "'");
    }
    r.add(std::move(v));
    return r;
}

}  // namespace detail

/// Runs one command. Exit status: 0 ok, 2 a verdict failed, 1 bad input or
/// precision exhausted.
inline int run_cli(const CliOptions& o, std::ostream& out, std::ostream& err) {
    Report r;
    try {
        WorkbenchConfig cfg = detail::load_config(o);
        r = detail::dispatch(o, cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    std::string body = o.format == OutputFormat::Structured ? r.structured() : r.text();
    if (o.out) {
        std::ofstream file(*o.out);
        if (!file) {
            err << "error: cannot write '" << *o.out << "'\n";
            return 1;
        }
        file << body;
    } else {
        out << body;
    }
    return r.passed() ? 0 : 2;
}

}  // namespace valwb
