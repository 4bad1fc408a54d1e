#pragma once

#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "valwb/errors.hpp"
#include "valwb/rational.hpp"
#include "valwb/scalar.hpp"
#include "valwb/valgroup.hpp"

namespace valwb {

/// Hard bound on ramification indices of any stored series. Classification
/// uses its own (much smaller) configured cap; this one only keeps exponent
/// keys inside machine integers.
inline constexpr long kMaxRamification = 1L << 24;

/// Truncated Puiseux series sum_n c_n t^(n/ram) + O(t^prec) over k.
///
/// The exact zero has no terms and infinite precision. A series with no terms
/// and finite precision is "unknown zero": it is indistinguishable from 0 at
/// that precision and its valuation is undecidable. Every stored key n
/// satisfies n/ram < prec, no coefficient is zero, and ram is reduced so that
/// gcd(ram, keys) == 1.
class Series {
public:
    Series() = default;

    static Series zero(Field f) { return Series(f); }

    static Series unknown_zero(Field f, const Rational& prec) {
        Series s(f);
        s.prec_ = GroupVal::fin(prec);
        return s;
    }

    static Series constant(const Scalar& c) {
        Series s(c.field());
        if (!c.is_zero()) s.terms_.emplace(0, c);
        return s;
    }

    static Series integer(Field f, long n) { return constant(Scalar::from_integer(f, n)); }

    /// Exact monomial c * t^exponent.
    static Series monomial(const Scalar& c, const Rational& exponent) {
        Series s(c.field());
        if (c.is_zero()) return s;
        long den = to_long(Integer(exponent.get_den()));
        check_ram(den);
        s.ram_ = den;
        s.terms_.emplace(to_long(Integer(exponent.get_num())), c);
        return s;
    }

    /// Build from (exponent, coefficient) pairs; terms at or beyond prec are dropped.
    static Series from_terms(Field f, const std::vector<std::pair<Rational, Scalar>>& terms,
                             const GroupVal& prec = GroupVal::inf()) {
        long ram = 1;
        for (const auto& [e, c] : terms) ram = std::lcm(ram, to_long(Integer(e.get_den())));
        check_ram(ram);
        Series s(f);
        s.ram_ = ram;
        s.prec_ = prec;
        for (const auto& [e, c] : terms) {
            if (!(c.field() == f)) throw FieldMismatch("series coefficient");
            Rational k = e * ram;
            long key = to_long(Integer(k.get_num()));
            auto [it, fresh] = s.terms_.emplace(key, c);
            if (!fresh) it->second += c;
        }
        s.drop_beyond_prec();
        s.drop_zeros();
        s.normalize();
        return s;
    }

    Field field() const { return field_; }
    long ram() const { return ram_; }
    const GroupVal& prec() const { return prec_; }
    const std::map<long, Scalar>& terms() const { return terms_; }

    bool is_exact() const { return prec_.is_inf(); }
    bool is_exact_zero() const { return terms_.empty() && prec_.is_inf(); }
    bool is_unknown_zero() const { return terms_.empty() && !prec_.is_inf(); }
    bool has_support() const { return !terms_.empty(); }

    Rational exponent_of(long key) const { return make_rational(key, ram_); }

    std::vector<std::pair<Rational, Scalar>> support() const {
        std::vector<std::pair<Rational, Scalar>> out;
        out.reserve(terms_.size());
        for (const auto& [k, c] : terms_) out.emplace_back(exponent_of(k), c);
        return out;
    }

    /// Coefficient of t^e (zero when absent; e must lie below prec).
    Scalar coeff(const Rational& e) const {
        if (GroupVal::fin(e) >= prec_)
            throw PrecisionExhausted("coefficient of t^" + e.get_str() + " beyond O(t^" + prec_.str() + ")");
        Rational k = e * ram_;
        if (k.get_den() != 1) return Scalar::zero(field_);
        auto it = terms_.find(to_long(Integer(k.get_num())));
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    /// t-adic valuation; PosInf for the exact zero.
    GroupVal val() const {
        if (!terms_.empty()) return GroupVal::fin(exponent_of(terms_.begin()->first));
        if (prec_.is_inf()) return GroupVal::inf();
        throw PrecisionExhausted("series is O(t^" + prec_.str() + ")");
    }

    /// Valuation, or the precision as a lower bound when undecidable.
    ValueBound val_bound() const {
        if (is_unknown_zero()) return ValueBound::at_least(prec_);
        return ValueBound::exactly(val());
    }

    /// Leading coefficient (the one at val()).
    Scalar leading_coeff() const {
        if (terms_.empty()) throw PrecisionExhausted("leading coefficient of " + str());
        return terms_.begin()->second;
    }

    Series with_prec(const GroupVal& p) const {
        Series s = *this;
        if (p < s.prec_) {
            s.prec_ = p;
            s.drop_beyond_prec();
            s.normalize();
        }
        return s;
    }

    Series operator-() const {
        Series s = *this;
        for (auto& [k, c] : s.terms_) c = -c;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) { return combine(a, b, false); }
    friend Series operator-(const Series& a, const Series& b) { return combine(a, b, true); }
    Series& operator+=(const Series& b) { return *this = *this + b; }
    Series& operator-=(const Series& b) { return *this = *this - b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_field(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return zero(a.field_);
        ValueBound va = a.val_bound();
        ValueBound vb = b.val_bound();
        GroupVal prec = min(a.prec_ + vb.value, b.prec_ + va.value);
        long ram = std::lcm(a.ram_, b.ram_);
        check_ram(ram);
        long sa = ram / a.ram_;
        long sb = ram / b.ram_;
        Series out(a.field_);
        out.ram_ = ram;
        out.prec_ = prec;
        long cutoff = out.key_cutoff();
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                long key = ka * sa + kb * sb;
                if (key >= cutoff) break;
                auto it = out.terms_.find(key);
                if (it == out.terms_.end()) out.terms_.emplace_hint(it, key, ca * cb);
                else it->second += ca * cb;
            }
        }
        out.drop_zeros();
        out.normalize();
        return out;
    }
    Series& operator*=(const Series& b) { return *this = *this * b; }

    Series scaled(const Scalar& c) const {
        check_field_scalar(c);
        if (c.is_zero()) return zero(field_);
        Series s = *this;
        for (auto& [k, x] : s.terms_) x *= c;
        return s;
    }

    /// Multiplication by t^e (exact, precision shifts along).
    Series shifted(const Rational& e) const {
        long den = to_long(Integer(e.get_den()));
        long ram = std::lcm(ram_, den);
        check_ram(ram);
        long s = ram / ram_;
        Rational k = e * ram;
        long delta = to_long(Integer(k.get_num()));
        Series out(field_);
        out.ram_ = ram;
        out.prec_ = prec_ + GroupVal::fin(e);
        for (const auto& [key, c] : terms_) out.terms_.emplace(key * s + delta, c);
        out.normalize();
        return out;
    }

    Series pow(unsigned n) const {
        Series result = integer(field_, 1);
        Series base = *this;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    /// Multiplicative inverse. With finite precision P and valuation v the
    /// result carries precision P - 2v; exact non-monomial inputs are expanded
    /// to absolute precision `work_prec`.
    Series invert(const Rational& work_prec) const {
        if (is_exact_zero()) throw DomainError("inverse of zero");
        GroupVal v = val();  // throws PrecisionExhausted for unknown zero
        const Rational& vq = v.rational();
        auto first = terms_.begin();
        Scalar inv_lead = first->second.inverse();
        long n0 = first->first;
        if (is_exact() && terms_.size() == 1) return monomial(inv_lead, -vq);

        Rational relative = is_exact() ? Rational(work_prec + vq) : Rational(prec_.rational() - vq);
        Series out(field_);
        out.ram_ = ram_;
        out.prec_ = GroupVal::fin(relative - vq);
        if (sgn(relative) <= 0) return out;
        long kmax = to_long(ceil_of(relative * ram_));
        std::vector<std::pair<long, Scalar>> tail;  // relative keys >= 1
        for (auto it = std::next(first); it != terms_.end(); ++it)
            tail.emplace_back(it->first - n0, it->second);
        std::map<long, Scalar> b;
        b.emplace(0, inv_lead);
        for (long k = 1; k < kmax; ++k) {
            Scalar acc = Scalar::zero(field_);
            bool any = false;
            for (const auto& [m, w] : tail) {
                if (m > k) break;
                auto it = b.find(k - m);
                if (it == b.end()) continue;
                acc += w * it->second;
                any = true;
            }
            if (!any || acc.is_zero()) continue;
            b.emplace(k, -(acc * inv_lead));
        }
        for (const auto& [k, c] : b) out.terms_.emplace(k - n0, c);
        out.drop_beyond_prec();
        out.normalize();
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.field_ == b.field_ && a.ram_ == b.ram_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
    }

    /// Text form "c1*t^(n1/e) + ... + O(t^P)"; exact zero prints as "0".
    std::string str() const {
        std::string out;
        for (const auto& [k, c] : terms_) {
            bool neg = c.is_negative();
            Scalar mag = neg ? -c : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            std::string mono = monomial_text(exponent_of(k));
            if (mono.empty()) out += mag.str();
            else if (mag.is_one()) out += mono;
            else out += mag.str() + "*" + mono;
        }
        if (!prec_.is_inf()) {
            if (!out.empty()) out += " + ";
            out += "O(" + power_text(prec_.rational()) + ")";
        }
        return out.empty() ? "0" : out;
    }

    static std::string power_text(const Rational& e) {
        if (e.get_den() == 1 && sgn(e) >= 0) {
            if (e == 1) return "t";
            return "t^" + e.get_str();
        }
        return "t^(" + e.get_str() + ")";
    }

private:
    explicit Series(Field f) : field_(f) {}

    static std::string monomial_text(const Rational& e) {
        if (sgn(e) == 0) return "";
        return power_text(e);
    }

    static void check_ram(long ram) {
        if (ram > kMaxRamification)
            throw RamificationCapExceeded("ramification index " + std::to_string(ram));
    }

    void check_field(const Series& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
    }
    void check_field_scalar(const Scalar& c) const {
        if (!(field_ == c.field())) throw FieldMismatch(field_.name() + " vs " + c.field().name());
    }

    /// Keys must be strictly below this bound to lie under prec.
    long key_cutoff() const {
        if (prec_.is_inf()) return std::numeric_limits<long>::max();
        Integer c = ceil_of(prec_.rational() * ram_);
        if (c > Integer(std::numeric_limits<long>::max() / 4)) return std::numeric_limits<long>::max();
        if (c < Integer(std::numeric_limits<long>::min() / 4)) return std::numeric_limits<long>::min() / 4;
        return c.get_si();
    }

    void drop_beyond_prec() {
        if (prec_.is_inf()) return;
        long cutoff = key_cutoff();
        terms_.erase(terms_.lower_bound(cutoff), terms_.end());
    }

    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
    }

    void normalize() {
        if (terms_.empty()) {
            ram_ = 1;
            return;
        }
        long g = ram_;
        for (const auto& [k, c] : terms_) {
            g = std::gcd(g, k);
            if (g == 1) return;
        }
        if (g <= 1) return;
        std::map<long, Scalar> t;
        for (auto& [k, c] : terms_) t.emplace_hint(t.end(), k / g, std::move(c));
        terms_ = std::move(t);
        ram_ /= g;
    }

    static Series combine(const Series& a, const Series& b, bool subtract) {
        a.check_field(b);
        long ram = std::lcm(a.ram_, b.ram_);
        check_ram(ram);
        long sa = ram / a.ram_;
        long sb = ram / b.ram_;
        Series out(a.field_);
        out.ram_ = ram;
        out.prec_ = min(a.prec_, b.prec_);
        for (const auto& [k, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), k * sa, c);
        for (const auto& [k, c] : b.terms_) {
            long key = k * sb;
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) out.terms_.emplace(key, subtract ? -c : c);
            else if (subtract) it->second -= c;
            else it->second += c;
        }
        out.drop_beyond_prec();
        out.drop_zeros();
        out.normalize();
        return out;
    }

    Field field_{};
    long ram_ = 1;
    std::map<long, Scalar> terms_;
    GroupVal prec_ = GroupVal::inf();
};

inline Series t_power(Field f, const Rational& e) { return Series::monomial(Scalar::one(f), e); }

}  // namespace valwb
