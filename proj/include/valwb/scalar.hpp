#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valwb/errors.hpp"
#include "valwb/rational.hpp"

namespace valwb {

/// The residue field k: F_p for a prime p, or Q when p == 0.
struct Field {
    std::uint32_t p = 0;

    static Field rationals() { return {0}; }
    static Field prime(std::uint64_t p) {
        if (p < 2 || p >= (1ull << 31)) throw DomainError("prime must lie in [2, 2^31)");
        Integer z(static_cast<unsigned long>(p));
        if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
            throw DomainError(std::to_string(p) + " is not prime");
        return {static_cast<std::uint32_t>(p)};
    }

    bool is_rational() const { return p == 0; }
    std::uint32_t characteristic() const { return p; }
    std::string name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }

    friend bool operator==(Field a, Field b) { return a.p == b.p; }
};

/// Element of k. Residues mod p are kept in [0, p).
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_integer(f, 1); }

    static Scalar from_integer(Field f, const Integer& n) {
        Scalar s(f);
        if (f.is_rational()) {
            s.q_ = n;
        } else {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), f.p);
            s.r_ = r.get_ui();
        }
        return s;
    }
    static Scalar from_integer(Field f, long n) { return from_integer(f, Integer(n)); }

    static Scalar from_rational(Field f, const Rational& q) {
        if (f.is_rational()) {
            Scalar s(f);
            s.q_ = q;
            return s;
        }
        Scalar den = from_integer(f, Integer(q.get_den()));
        if (den.is_zero()) throw DomainError("denominator divisible by " + std::to_string(f.p));
        return from_integer(f, Integer(q.get_num())) * den.inverse();
    }

    Field field() const { return field_; }
    bool is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }
    bool is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

    /// Residue mod p (only for F_p).
    std::uint64_t residue() const { return r_; }
    /// Exact rational (only for Q).
    const Rational& rational() const { return q_; }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_rational()) s.q_ = -q_;
        else s.r_ = r_ == 0 ? 0 : field_.p - r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (field_.is_rational()) q_ += o.q_;
        else r_ = (r_ + o.r_) % field_.p;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check(o);
        if (field_.is_rational()) q_ -= o.q_;
        else r_ = (r_ + field_.p - o.r_) % field_.p;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (field_.is_rational()) q_ *= o.q_;
        else r_ = (r_ * o.r_) % field_.p;
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw DomainError("inverse of zero scalar");
        Scalar s(field_);
        if (field_.is_rational()) {
            s.q_ = 1 / q_;
        } else {
            s.r_ = pow_mod(r_, field_.p - 2, field_.p);
        }
        return s;
    }

    Scalar pow(std::uint64_t e) const {
        Scalar result = one(field_);
        Scalar base = *this;
        while (e) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (!(a.field_ == b.field_)) return false;
        return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
    }

    std::string str() const { return field_.is_rational() ? q_.get_str() : std::to_string(r_); }

    /// True when printing needs a leading minus (only over Q).
    bool is_negative() const { return field_.is_rational() && sgn(q_) < 0; }

private:
    explicit Scalar(Field f) : field_(f) {}

    void check(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw FieldMismatch(field_.name() + " vs " + o.field_.name());
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1 % m;
        b %= m;
        while (e) {
            if (e & 1) r = r * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return r;
    }

    Field field_{};
    std::uint64_t r_ = 0;
    Rational q_{0};
};

/// Smallest element of order exactly e in k*, if any. Over Q only e <= 2.
inline std::optional<Scalar> primitive_root_of_unity(Field f, long e) {
    if (e < 1) throw DomainError("root of unity order must be positive");
    if (e == 1) return Scalar::one(f);
    if (f.is_rational()) {
        if (e == 2) return Scalar::from_integer(f, -1);
        return std::nullopt;
    }
    if ((f.p - 1) % static_cast<std::uint64_t>(e) != 0) return std::nullopt;
    // Prime factors of e, for the order test.
    std::vector<long> primes;
    long rest = e;
    for (long d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            primes.push_back(d);
            while (rest % d == 0) rest /= d;
        }
    }
    if (rest > 1) primes.push_back(rest);
    for (std::uint64_t c = 2; c < f.p; ++c) {
        Scalar z = Scalar::from_integer(f, static_cast<long>(c));
        if (!z.pow(static_cast<std::uint64_t>(e)).is_one()) continue;
        bool primitive = true;
        for (long q : primes) {
            if (z.pow(static_cast<std::uint64_t>(e / q)).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return z;
    }
    return std::nullopt;
}

}  // namespace valwb
