#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "json.hpp"
#include "valwb/errors.hpp"
#include "valwb/rational.hpp"

namespace valwb {

/// Element of Q or of (Z + Q)_lex, extended by +infinity.
///
/// The rational group is embedded as q -> (0, q), so Fin(q) and Lex(0, q)
/// are the same value; the Z-component is stored explicitly and is zero for
/// every rational. v(0) is represented by PosInf; there is no -infinity.
class GroupVal {
public:
    GroupVal() = default;

    static GroupVal fin(Rational q) { return GroupVal(false, 0, std::move(q)); }
    static GroupVal fin(long num, long den = 1) { return fin(make_rational(num, den)); }
    static GroupVal lex(long z, Rational q) { return GroupVal(false, z, std::move(q)); }
    static GroupVal inf() { return GroupVal(true, 0, Rational(0)); }

    bool is_inf() const { return inf_; }
    bool is_fin() const { return !inf_ && z_ == 0; }
    long z() const { return z_; }
    const Rational& q() const { return q_; }

    /// Rational part; throws unless the value lies in the embedded Q.
    const Rational& rational() const {
        if (!is_fin()) throw DomainError("value " + str() + " is not a rational");
        return q_;
    }

    friend GroupVal operator+(const GroupVal& u, const GroupVal& v) {
        if (u.inf_ || v.inf_) return inf();
        Rational q = u.q_ + v.q_;
        return GroupVal(false, u.z_ + v.z_, std::move(q));
    }

    /// u - v for finite v; PosInf - v stays PosInf.
    friend GroupVal operator-(const GroupVal& u, const GroupVal& v) {
        if (v.inf_) throw DomainError("subtraction of infinity");
        if (u.inf_) return inf();
        Rational q = u.q_ - v.q_;
        return GroupVal(false, u.z_ - v.z_, std::move(q));
    }

    GroupVal operator-() const {
        if (inf_) throw DomainError("negation of infinity");
        Rational q = -q_;
        return GroupVal(false, -z_, std::move(q));
    }

    GroupVal times(long k) const {
        if (inf_) {
            if (k == 0) throw DomainError("0 * infinity");
            if (k < 0) throw DomainError("negative multiple of infinity");
            return inf();
        }
        Rational q = q_ * k;
        return GroupVal(false, z_ * k, std::move(q));
    }

    friend bool operator==(const GroupVal& u, const GroupVal& v) {
        if (u.inf_ || v.inf_) return u.inf_ == v.inf_;
        return u.z_ == v.z_ && u.q_ == v.q_;
    }

    friend std::strong_ordering operator<=>(const GroupVal& u, const GroupVal& v) {
        if (u.inf_ || v.inf_) {
            if (u.inf_ && v.inf_) return std::strong_ordering::equal;
            return u.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (u.z_ != v.z_) return u.z_ <=> v.z_;
        int c = cmp(u.q_, v.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const {
        if (inf_) return "inf";
        if (z_ == 0) return q_.get_str();
        return "(" + std::to_string(z_) + ", " + q_.get_str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const GroupVal& v) { return os << v.str(); }

    nlohmann::json to_json() const {
        if (inf_) return {{"inf", true}};
        if (z_ == 0) return {{"fin", q_.get_str()}};
        return {{"lex", nlohmann::json::array({z_, q_.get_str()})}};
    }

    static GroupVal from_json(const nlohmann::json& j) {
        if (!j.is_object() || j.size() != 1) throw InvalidSpec("group value must be a one-key object");
        if (j.contains("inf")) return inf();
        if (j.contains("fin")) return fin(parse_rational(j.at("fin").get<std::string>()));
        if (j.contains("lex")) {
            const auto& a = j.at("lex");
            if (!a.is_array() || a.size() != 2) throw InvalidSpec("lex value must be [z, \"p/q\"]");
            return lex(a.at(0).get<long>(), parse_rational(a.at(1).get<std::string>()));
        }
        throw InvalidSpec("unknown group value key '" + j.begin().key() + "'");
    }

private:
    GroupVal(bool inf, long z, Rational q) : inf_(inf), z_(z), q_(std::move(q)) {
        q_.canonicalize();
    }

    bool inf_ = false;
    long z_ = 0;
    Rational q_{0};
};

inline GroupVal min(const GroupVal& a, const GroupVal& b) { return b < a ? b : a; }
inline GroupVal max(const GroupVal& a, const GroupVal& b) { return a < b ? b : a; }

/// True iff v is torsion modulo the base value group; the divisible hull of
/// vK is Q here, so this is exactly "the Z-component is zero".
inline bool is_torsion_mod_base(const GroupVal& v) {
    if (v.is_inf()) throw DomainError("is_torsion_mod_base: infinity has no class");
    return v.z() == 0;
}

/// A valuation that is either known exactly or only bounded from below.
struct ValueBound {
    GroupVal value;
    bool exact = true;

    static ValueBound exactly(GroupVal v) { return {std::move(v), true}; }
    static ValueBound at_least(GroupVal v) { return {std::move(v), false}; }

    /// True when the underlying value is provably > threshold.
    bool proves_greater_than(const GroupVal& threshold) const { return value > threshold; }
    /// True when the underlying value is provably >= threshold.
    bool proves_at_least(const GroupVal& threshold) const { return value >= threshold; }
};

inline ValueBound operator+(const ValueBound& a, const ValueBound& b) {
    return {a.value + b.value, a.exact && b.exact};
}

/// Running minimum over terms that are exact values or lower bounds.
/// The minimum is exact when an exact term attains the least bound.
class MinAccumulator {
public:
    void add(const ValueBound& term) {
        if (!any_ || term.value < least_) {
            least_ = term.value;
            attained_ = term.exact;
        } else if (term.value == least_ && term.exact) {
            attained_ = true;
        }
        any_ = true;
    }

    bool empty() const { return !any_; }

    ValueBound result() const {
        if (!any_) return ValueBound::exactly(GroupVal::inf());
        return {least_, attained_};
    }

private:
    bool any_ = false;
    GroupVal least_;
    bool attained_ = false;
};

}  // namespace valwb
