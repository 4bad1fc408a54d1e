#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valwb/errors.hpp"
#include "valwb/poly.hpp"
#include "valwb/series.hpp"

namespace valwb {

/// A pseudo-Cauchy sequence a_0..a_horizon with gamma_0..gamma_(horizon-1), given by
/// a named closed form or by an explicit list of elements. Elements are
/// exact; gamma_m = v(a_m - a_{m+1}).
class PcsGenerator {
public:
    enum class Kind { ArtinSchreier, Exponential, MixedRadix, Explicit };

    /// a_m = sum_{n<=m} t^(p^n) over F_p; gamma_m = p^(m+1).
    static PcsGenerator artin_schreier(long p, long horizon = 12) {
        PcsGenerator g(Kind::ArtinSchreier, Field::prime(static_cast<std::uint64_t>(p)), horizon);
        g.p_ = p;
        return g;
    }
    /// a_m = sum_{n<=m} t^n / n! over Q; gamma_m = m + 1.
    static PcsGenerator exponential(long horizon = 12) {
        return PcsGenerator(Kind::Exponential, Field::rationals(), horizon);
    }
    /// a_m = sum_{n<=m} t^(q^n / p^n) over Q; gamma_m = (q/p)^(m+1).
    static PcsGenerator mixed_radix(long p, long q, long horizon = 12) {
        if (p < 2 || q <= p) throw DomainError("mixed-radix needs 2 <= p < q");
        Field::prime(static_cast<std::uint64_t>(p));
        Field::prime(static_cast<std::uint64_t>(q));
        PcsGenerator g(Kind::MixedRadix, Field::rationals(), horizon);
        g.p_ = p;
        g.q_ = q;
        return g;
    }
    /// Explicit elements a_0..a_n; the horizon is n (the number of known gammas).
    static PcsGenerator explicit_list(std::vector<Series> elements) {
        if (elements.size() < 3) throw NotPcs("explicit sequence needs at least 3 elements");
        Field f = elements.front().field();
        PcsGenerator g(Kind::Explicit, f, static_cast<long>(elements.size()) - 1);
        g.elements_ = std::move(elements);
        return g;
    }

    Kind kind() const { return kind_; }
    Field field() const { return field_; }
    long horizon() const { return horizon_; }
    long p() const { return p_; }
    long q() const { return q_; }
    const std::vector<Series>& explicit_elements() const { return elements_; }
    const std::optional<GroupVal>& value_group_bound() const { return bound_; }
    void set_value_group_bound(std::optional<GroupVal> b) { bound_ = std::move(b); }
    void set_horizon(long h) {
        if (h < 3) throw DomainError("horizon must be >= 3");
        if (kind_ == Kind::Explicit && h > static_cast<long>(elements_.size()) - 1)
            throw HorizonExceeded("explicit sequence has only " + std::to_string(elements_.size()) + " elements");
        horizon_ = h;
    }
    /// Closed forms can be materialized past the horizon.
    bool extendable() const { return kind_ != Kind::Explicit; }

    std::string name() const {
        switch (kind_) {
            case Kind::ArtinSchreier: return "artin-schreier(" + std::to_string(p_) + ")";
            case Kind::Exponential: return "exponential";
            case Kind::MixedRadix: return "mixed-radix(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
            case Kind::Explicit: return "explicit";
        }
        return "?";
    }

    /// a_m.
    Series element(long m) const {
        if (m < 0) throw DomainError("negative sequence index");
        switch (kind_) {
            case Kind::ArtinSchreier: {
                std::vector<std::pair<Rational, Scalar>> terms;
                Integer e = 1;
                for (long n = 0; n <= m; ++n) {
                    terms.emplace_back(Rational(e), Scalar::one(field_));
                    e *= p_;
                }
                return Series::from_terms(field_, terms);
            }
            case Kind::Exponential: {
                std::vector<std::pair<Rational, Scalar>> terms;
                Integer fact = 1;
                for (long n = 0; n <= m; ++n) {
                    if (n > 0) fact *= n;
                    terms.emplace_back(Rational(n), Scalar::from_rational(field_, Rational(1) / Rational(fact)));
                }
                return Series::from_terms(field_, terms);
            }
            case Kind::MixedRadix: {
                std::vector<std::pair<Rational, Scalar>> terms;
                Integer num = 1, den = 1;
                for (long n = 0; n <= m; ++n) {
                    Rational e(num, den);
                    e.canonicalize();
                    terms.emplace_back(e, Scalar::one(field_));
                    num *= q_;
                    den *= p_;
                }
                return Series::from_terms(field_, terms);
            }
            case Kind::Explicit:
                if (m >= static_cast<long>(elements_.size()))
                    throw HorizonExceeded("explicit sequence index " + std::to_string(m));
                return elements_[static_cast<std::size_t>(m)];
        }
        throw DomainError("unknown generator kind");
    }

    /// gamma_m = v(a_m - a_{m+1}).
    GroupVal gamma(long m) const {
        switch (kind_) {
            case Kind::ArtinSchreier: {
                Integer e;
                mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(m + 1));
                return GroupVal::fin(Rational(e));
            }
            case Kind::Exponential: return GroupVal::fin(m + 1);
            case Kind::MixedRadix: {
                Integer num, den;
                mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q_), static_cast<unsigned long>(m + 1));
                mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(m + 1));
                Rational r(num, den);
                r.canonicalize();
                return GroupVal::fin(r);
            }
            case Kind::Explicit: return (element(m) - element(m + 1)).val();
        }
        throw DomainError("unknown generator kind");
    }

    /// a_0..a_{horizon}: enough elements to read off every materialized gamma.
    std::vector<Series> prefix() const {
        std::vector<Series> out;
        for (long m = 0; m <= horizon_; ++m) out.push_back(element(m));
        return out;
    }

    /// Parse "artin-schreier(p)", "exponential" or "mixed-radix(p,q)".
    static PcsGenerator parse(const std::string& text, long horizon = 12) {
        auto args = [&](const std::string& head) {
            std::vector<long> out;
            std::string inner = text.substr(head.size());
            if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
                throw InvalidSpec("malformed generator '" + text + "'");
            inner = inner.substr(1, inner.size() - 2);
            std::size_t pos = 0;
            while (pos <= inner.size()) {
                std::size_t comma = inner.find(',', pos);
                std::string part = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                try {
                    out.push_back(std::stol(part));
                } catch (const std::exception&) {
                    throw InvalidSpec("malformed generator argument '" + part + "'");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return out;
        };
        if (text == "exponential") return exponential(horizon);
        if (text.rfind("artin-schreier", 0) == 0) {
            auto a = args("artin-schreier");
            if (a.size() != 1) throw InvalidSpec("artin-schreier takes one argument");
            return artin_schreier(a[0], horizon);
        }
        if (text.rfind("mixed-radix", 0) == 0) {
            auto a = args("mixed-radix");
            if (a.size() != 2) throw InvalidSpec("mixed-radix takes two arguments");
            return mixed_radix(a[0], a[1], horizon);
        }
        throw InvalidSpec("unknown generator '" + text + "'");
    }

private:
    PcsGenerator(Kind k, Field f, long horizon) : kind_(k), field_(f), horizon_(horizon) {
        if (horizon < 3) throw DomainError("horizon must be >= 3");
    }

    Kind kind_;
    Field field_;
    long horizon_;
    long p_ = 0;
    long q_ = 0;
    std::vector<Series> elements_;
    std::optional<GroupVal> bound_;
};

/// gamma_m = v(z_m - z_{m+1}) for a finite prefix, after checking that the
/// gammas strictly increase and v(z_nu - z_rho) = gamma_nu for nu < rho.
inline std::vector<GroupVal> validate_prefix(const std::vector<Series>& prefix) {
    if (prefix.size() < 3) throw NotPcs("prefix needs at least 3 elements");
    std::vector<GroupVal> gammas;
    for (std::size_t m = 0; m + 1 < prefix.size(); ++m) {
        Series d = prefix[m] - prefix[m + 1];
        if (d.is_exact_zero()) throw NotPcsAt(static_cast<long>(m), "consecutive elements coincide");
        gammas.push_back(d.val());
        if (m > 0 && !(gammas[m - 1] < gammas[m]))
            throw NotPcsAt(static_cast<long>(m), "gamma_" + std::to_string(m) + " = " + gammas[m].str() +
                                                     " does not exceed gamma_" + std::to_string(m - 1) + " = " +
                                                     gammas[m - 1].str());
    }
    for (std::size_t nu = 0; nu < prefix.size(); ++nu) {
        for (std::size_t rho = nu + 2; rho < prefix.size(); ++rho) {
            GroupVal v = (prefix[nu] - prefix[rho]).val();
            if (!(v == gammas[nu]))
                throw NotPcsAt(static_cast<long>(nu), "v(z_" + std::to_string(nu) + " - z_" + std::to_string(rho) +
                                                          ") = " + v.str() + " differs from gamma");
        }
    }
    return gammas;
}

/// Validate the generator's materialized prefix; for closed forms also check
/// the recorded gammas against the elements.
inline std::vector<GroupVal> validate_generator(const PcsGenerator& gen) {
    auto gammas = validate_prefix(gen.prefix());
    for (std::size_t m = 0; m < gammas.size(); ++m)
        if (!(gammas[m] == gen.gamma(static_cast<long>(m))))
            throw NotPcsAt(static_cast<long>(m), "closed-form gamma disagrees with the elements");
    return gammas;
}

/// v(y - a_m) = gamma_m for every materialized m.
inline bool is_limit(const Series& y, const PcsGenerator& gen) {
    for (long m = 0; m < gen.horizon(); ++m) {
        GroupVal g = gen.gamma(m);
        ValueBound b = (y - gen.element(m)).val_bound();
        if (b.exact) {
            if (!(b.value == g)) return false;
        } else if (b.value > g) {
            return false;
        } else {
            throw PrecisionExhausted("v(y - a_" + std::to_string(m) + ") undecidable against gamma = " + g.str());
        }
    }
    return true;
}

/// Values v f(a_m) along the sequence and the detected trend.
struct ValuesAlong {
    std::vector<ValueBound> values;
    bool ultimately_constant = false;
    GroupVal value;        // when ultimately constant
    long from_index = 0;   // first index of the constant tail
};

inline ValuesAlong values_along(const PolyS& f, const PcsGenerator& gen, long window = 3) {
    if (window < 1) throw DomainError("window must be positive");
    if (f.is_zero()) throw ZeroPolynomial("values_along of 0");
    ValuesAlong out;
    for (long m = 0; m <= gen.horizon(); ++m) out.values.push_back(f(gen.element(m)).val_bound());
    long n = static_cast<long>(out.values.size());
    if (n < window) return out;
    const ValueBound& last = out.values.back();
    if (!last.exact || last.value.is_inf()) return out;
    for (long i = n - window; i < n; ++i) {
        const ValueBound& b = out.values[static_cast<std::size_t>(i)];
        if (!b.exact || !(b.value == last.value)) return out;
    }
    out.ultimately_constant = true;
    out.value = last.value;
    long from = n - 1;
    while (from > 0) {
        const ValueBound& b = out.values[static_cast<std::size_t>(from - 1)];
        if (!b.exact || !(b.value == last.value)) break;
        --from;
    }
    out.from_index = from;
    return out;
}

/// Desk-scale classification of a generator.
struct GeneratorClass {
    enum class Verdict { CauchyWithLimit, TranscendentalTypeEvidence };
    Verdict verdict;
    Series limit;            // CauchyWithLimit
    std::string criterion;   // "unbounded-denominators" or "bounded-gamma"
    std::string report;
    long materialized = 0;
};

/// Limit of a closed-form sequence is read off once gamma_m >= prec; the
/// materialization may run past the horizon up to `extend_limit`.
inline GeneratorClass classify_generator(const PcsGenerator& gen, const Rational& prec, long ram_cap = 64,
                                         long extend_limit = 4096) {
    validate_generator(gen);
    GroupVal target = GroupVal::fin(prec);
    long last = gen.extendable() ? std::max(extend_limit, gen.horizon()) : gen.horizon();
    for (long m = 0; m <= last; ++m) {
        Series a = gen.element(m);
        if (a.ram() > ram_cap) {
            GeneratorClass c{GeneratorClass::Verdict::TranscendentalTypeEvidence, Series(), "unbounded-denominators",
                             "support denominators reach " + std::to_string(a.ram()) + " at a_" + std::to_string(m) +
                                 ", beyond the ramification cap " + std::to_string(ram_cap) +
                                 "; the exponents share no common denominator",
                             m + 1};
            return c;
        }
        if (m == gen.horizon() - 1 && gen.value_group_bound()) {
            bool bounded = true;
            for (long j = 0; j < gen.horizon(); ++j)
                if (!(gen.gamma(j) < *gen.value_group_bound())) bounded = false;
            if (bounded) {
                return GeneratorClass{GeneratorClass::Verdict::TranscendentalTypeEvidence, Series(), "bounded-gamma",
                                      "all " + std::to_string(gen.horizon()) + " gammas lie below the bound " +
                                          gen.value_group_bound()->str(),
                                      gen.horizon()};
            }
        }
        if (m >= gen.horizon() - 1 && m < last && gen.gamma(m) >= target) {
            return GeneratorClass{GeneratorClass::Verdict::CauchyWithLimit, a.with_prec(target), "",
                                  "gamma_" + std::to_string(m) + " = " + gen.gamma(m).str() +
                                      " reaches the working precision " + prec.get_str(),
                                  m + 1};
        }
    }
    throw HorizonExceeded("no classification criterion fired within " + std::to_string(last) + " terms of " +
                          gen.name());
}

}  // namespace valwb
