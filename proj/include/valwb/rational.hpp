#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "valwb/errors.hpp"

namespace valwb {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" or "p"; always in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError(1, 1, "empty rational");
    s = s.substr(first, last - first + 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError(1, 1, "bad rational '" + s + "'");
    if (r.get_den() == 0) throw ParseError(1, 1, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// Smallest integer strictly greater than r.
inline Integer floor_plus_one(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f + 1;
}

inline Integer ceil_of(const Rational& r) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return c;
}

inline Integer floor_of(const Rational& r) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return f;
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw DomainError("integer out of range: " + z.get_str());
    return z.get_si();
}

}  // namespace valwb
