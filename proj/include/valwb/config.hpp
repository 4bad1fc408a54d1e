#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "valwb/errors.hpp"
#include "valwb/lifting.hpp"
#include "valwb/text.hpp"
#include "valwb/valuation.hpp"

namespace valwb {

using nlohmann::json;

/// Run parameters shared by every subcommand.
struct WorkbenchConfig {
    Field field = Field::rationals();
    Rational precision{64};
    long ram_cap = 64;
    long horizon = 12;
    long window = 3;
    std::uint64_t seed = 1;
    std::optional<ValuationSpec> spec;
    std::string source;  // canonical dump of the config, for digests

    LiftingContext context() const { return LiftingContext{precision, ram_cap, 4096}; }

    /// Default precision, honouring VALWB_PREC.
    static Rational default_precision() {
        if (const char* env = std::getenv("VALWB_PREC"); env && *env) {
            Rational r = parse_rational(env);
            if (sgn(r) <= 0) throw DomainError("VALWB_PREC must be positive");
            return r;
        }
        return Rational(64);
    }
};

namespace detail {

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw InvalidSpec(where + " must be an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!ok.count(it.key())) throw InvalidSpec("unknown key '" + it.key() + "' in " + where);
}

inline Rational rational_of(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidSpec(where + " must be an integer or a \"p/q\" string");
}

inline long long_of(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InvalidSpec(where + " must be an integer");
    return j.get<long>();
}

}  // namespace detail

/// Group value: {"fin": "p/q"}, {"lex": [z, "p/q"]}, {"inf": true}, or a bare rational.
inline GroupVal group_val_from_json(const json& j) {
    if (j.is_object()) return GroupVal::from_json(j);
    if (j.is_string() && j.get<std::string>() == "inf") return GroupVal::inf();
    return GroupVal::fin(detail::rational_of(j, "group value"));
}

/// Parse a group value given on the command line: "3/4", "inf" or "(1, 0)".
inline GroupVal parse_group_val(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "inf") return GroupVal::inf();
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw ParseError(1, 1, "lex value needs '(z, q)'");
        return GroupVal::lex(std::stol(s.substr(1, comma - 1)), parse_rational(s.substr(comma + 1, s.size() - comma - 2)));
    }
    return GroupVal::fin(parse_rational(s));
}

/// Center of a monomial spec: a series text, or {"limit": generator} for the
/// limit of a named sequence at the given precision.
inline Series center_from_json(const json& j, Field f, const Rational& prec) {
    if (j.is_string()) return parse_series(j.get<std::string>(), f, prec);
    detail::only_keys(j, {"limit"}, "center");
    auto gen = PcsGenerator::parse(j.at("limit").get<std::string>());
    if (!(gen.field() == f)) throw FieldMismatch("generator field " + gen.field().name() + " vs " + f.name());
    auto c = classify_generator(gen, prec);
    if (c.verdict != GeneratorClass::Verdict::CauchyWithLimit)
        throw InvalidSpec("center sequence has no limit in the completion");
    return c.limit;
}

inline ValuationSpec spec_from_json(const json& j, Field f, const Rational& prec, long horizon, long window,
                                    FieldTag tag) {
    if (!j.is_object() || j.size() != 1) throw InvalidSpec("spec must be a one-key object");
    const std::string kind = j.begin().key();
    const json& body = j.begin().value();
    if (kind == "gauss") {
        detail::only_keys(body, {}, "gauss");
        return ValuationSpec::gauss(tag);
    }
    if (kind == "monomial") {
        detail::only_keys(body, {"center", "gamma", "minpoly", "irreducible"}, "monomial");
        Series c = center_from_json(body.at("center"), f, prec);
        AlgElement a = AlgElement::plain(c);
        if (body.contains("minpoly"))
            a = attach_minpoly(c, parse_poly_k(body.at("minpoly").get<std::string>(), f),
                               body.value("irreducible", false));
        return ValuationSpec::monomial(a, group_val_from_json(body.at("gamma")), tag);
    }
    if (kind == "keypoly") {
        detail::only_keys(body, {"Q", "vQ", "base", "pair"}, "keypoly");
        PolyS q = parse_poly(body.at("Q").get<std::string>(), f, prec);
        GroupVal vq = group_val_from_json(body.at("vQ"));
        ValuationSpec base = spec_from_json(body.at("base"), f, prec, horizon, window, tag);
        std::optional<PairOfDefinition> pair;
        if (body.contains("pair")) {
            const json& p = body.at("pair");
            detail::only_keys(p, {"center", "gamma"}, "pair");
            pair = PairOfDefinition{AlgElement::plain(center_from_json(p.at("center"), f, prec)),
                                    group_val_from_json(p.at("gamma"))};
        }
        return ValuationSpec::keypoly(q, vq, base, pair, tag);
    }
    if (kind == "pcslimit") {
        detail::only_keys(body, {"generator", "explicit", "value_group_bound"}, "pcslimit");
        std::optional<PcsGenerator> gen;
        if (body.contains("generator")) {
            gen = PcsGenerator::parse(body.at("generator").get<std::string>(), horizon);
        } else if (body.contains("explicit")) {
            std::vector<Series> elems;
            for (const auto& e : body.at("explicit")) elems.push_back(parse_series(e.get<std::string>(), f, prec));
            gen = PcsGenerator::explicit_list(std::move(elems));
        } else {
            throw InvalidSpec("pcslimit needs 'generator' or 'explicit'");
        }
        if (!(gen->field() == f)) throw FieldMismatch("generator field " + gen->field().name() + " vs " + f.name());
        if (body.contains("value_group_bound")) gen->set_value_group_bound(group_val_from_json(body.at("value_group_bound")));
        return ValuationSpec::pcs_limit(*gen, std::min(window, gen->horizon()), tag);
    }
    throw InvalidSpec("unknown spec kind '" + kind + "'");
}

/// Convert a JSON parser error position to line/column.
inline ParseError json_parse_error(const std::string& text, const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::string what = e.what();
    auto cut = what.find("parse error");
    return ParseError(line, col, cut == std::string::npos ? what : what.substr(cut));
}

/// `prec` (from --prec) wins over the file, which wins over VALWB_PREC.
inline WorkbenchConfig config_from_text(const std::string& text, const std::optional<Rational>& prec = {}) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw json_parse_error(text, e);
    }
    detail::only_keys(j, {"base_field", "precision", "ram_cap", "horizon", "window", "seed", "spec", "over", "cofinal"},
                      "config");
    WorkbenchConfig c;
    c.precision = WorkbenchConfig::default_precision();
    try {
        if (j.contains("base_field")) {
            detail::only_keys(j.at("base_field"), {"char"}, "base_field");
            long p = detail::long_of(j.at("base_field").at("char"), "base_field.char");
            c.field = p == 0 ? Field::rationals() : Field::prime(static_cast<std::uint64_t>(p));
        }
        if (j.contains("precision")) c.precision = detail::rational_of(j.at("precision"), "precision");
        if (j.contains("ram_cap")) c.ram_cap = detail::long_of(j.at("ram_cap"), "ram_cap");
        if (j.contains("horizon")) c.horizon = detail::long_of(j.at("horizon"), "horizon");
        if (j.contains("window")) c.window = detail::long_of(j.at("window"), "window");
        if (j.contains("seed")) c.seed = static_cast<std::uint64_t>(detail::long_of(j.at("seed"), "seed"));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(e.what());
    }
    if (prec) c.precision = *prec;
    if (sgn(c.precision) <= 0) throw InvalidSpec("precision must be positive");
    if (c.horizon < 3) throw InvalidSpec("horizon must be >= 3");
    if (c.window < 1) throw InvalidSpec("window must be >= 1");
    if (c.ram_cap < 1) throw InvalidSpec("ram_cap must be >= 1");
    FieldTag tag = FieldTag::OverK;
    if (j.contains("over")) {
        std::string o = j.at("over").get<std::string>();
        if (o == "Khat") tag = FieldTag::OverKhat;
        else if (o != "K") throw InvalidSpec("'over' must be \"K\" or \"Khat\"");
    }
    if (j.contains("spec")) {
        try {
            c.spec = spec_from_json(j.at("spec"), c.field, c.precision, c.horizon, c.window, tag);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidSpec(e.what());
        }
        if (j.value("cofinal", false)) c.spec = c.spec->declare_cofinal();
    }
    c.source = j.dump();
    return c;
}

inline WorkbenchConfig config_from_file(const std::string& path, const std::optional<Rational>& prec = {}) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_text(ss.str(), prec);
}

}  // namespace valwb
