#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "valwb/poly.hpp"
#include "valwb/series.hpp"

namespace valwb {

/// Seeded source of test polynomials. Uses the raw mt19937_64 stream with
/// modulo reduction so that draws are identical on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next() { return rng_(); }

    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
    bool coin() { return (next() & 1) != 0; }

    Scalar scalar(Field f, long range = 3) {
        if (f.is_rational()) return Scalar::from_integer(f, uniform(-range, range));
        return Scalar::from_integer(f, uniform(0, static_cast<long>(f.p) - 1));
    }
    Scalar nonzero_scalar(Field f, long range = 3) {
        for (;;) {
            Scalar s = scalar(f, range);
            if (!s.is_zero()) return s;
        }
    }

    /// Exact polynomial in t with exponents in [low, low + span] (denominator `den`).
    Series exact_coeff(Field f, long low = 0, long span = 3, long den = 1, long range = 3) {
        std::vector<std::pair<Rational, Scalar>> terms;
        for (long j = 0; j <= span; ++j)
            if (coin()) terms.emplace_back(make_rational(low + j, den), scalar(f, range));
        return Series::from_terms(f, terms);
    }
    /// Nonzero variant of exact_coeff.
    Series exact_unit_like(Field f, long low = 0, long span = 3, long den = 1, long range = 3) {
        Series s = exact_coeff(f, low, span, den, range);
        if (s.is_exact_zero()) s = Series::monomial(nonzero_scalar(f, range), make_rational(low, den));
        return s;
    }
    /// A genuine element of k((t)): a random head plus one deep term, known to O(t^prec).
    Series khat_coeff(Field f, const Rational& prec, long span = 3, long range = 3) {
        Series head = exact_coeff(f, 0, span, 1, range);
        while (head.is_exact_zero()) head = exact_coeff(f, 0, span, 1, range);
        long lo = span + 1;
        long hi = std::max(lo, to_long(floor_of(prec)) - 1);
        Series tail = Series::monomial(nonzero_scalar(f, range), Rational(uniform(lo, hi)));
        return (head + tail).with_prec(GroupVal::fin(prec));
    }

    /// Polynomial of exact degree `deg` whose coefficients come from `coeff`.
    template <typename Gen>
    PolyS poly(Field f, long deg, bool monic, Gen&& coeff) {
        std::vector<Series> c;
        for (long i = 0; i < deg; ++i) c.push_back(coeff());
        if (monic) {
            c.push_back(Series::integer(f, 1));
        } else {
            Series lead = coeff();
            while (!lead.has_support() || lead.val_bound().value.is_inf()) lead = coeff();
            c.push_back(lead);
        }
        return PolyS(f, std::move(c));
    }

    /// Random polynomial over K with small exact coefficients.
    PolyS small_poly(Field f, long deg, bool monic = false) {
        return poly(f, deg, monic, [&] { return exact_coeff(f); });
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace valwb
