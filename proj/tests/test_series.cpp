#include <gtest/gtest.h>

#include <map>
#include <random>

#include "printers.hpp"
#include "valwb/ratfunc.hpp"
#include "valwb/sampling.hpp"
#include "valwb/series.hpp"
#include "valwb/text.hpp"

using namespace valwb;

namespace {

Field Q = Field::rationals();

// Exponent -> coefficient, over Q, by schoolbook convolution.
std::map<Rational, Rational> convolve(const Series& a, const Series& b) {
    std::map<Rational, Rational> out;
    for (const auto& [ea, ca] : a.support())
        for (const auto& [eb, cb] : b.support()) out[ea + eb] += ca.rational() * cb.rational();
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<Rational, Rational> as_map(const Series& s) {
    std::map<Rational, Rational> out;
    for (const auto& [e, c] : s.support()) out[e] = c.rational();
    return out;
}

}  // namespace

TEST(Series, ExactProductMatchesConvolution) {
    Sampler rng(11);
    for (int i = 0; i < 200; ++i) {
        Series a = rng.exact_coeff(Q, -2, 5, rng.uniform(1, 3));
        Series b = rng.exact_coeff(Q, 0, 4, rng.uniform(1, 3));
        ASSERT_EQ(as_map(a * b), convolve(a, b)) << a.str() << " * " << b.str();
    }
}

TEST(Series, ProductPrecision) {
    // (1 + O(t^5)) * (t^2 + O(t^7)) is known to O(t^7)
    Series a = parse_series("1 + O(t^5)", Q);
    Series b = parse_series("t^2 + O(t^7)", Q);
    EXPECT_EQ((a * b).prec(), GroupVal::fin(7));
    EXPECT_EQ((a + b).prec(), GroupVal::fin(5));
}

TEST(Series, ZeroKinds) {
    Series z = Series::zero(Q);
    Series u = Series::unknown_zero(Q, 10);
    EXPECT_TRUE(z.is_exact_zero());
    EXPECT_TRUE(z.val().is_inf());
    EXPECT_TRUE(u.is_unknown_zero());
    EXPECT_FALSE(u.val_bound().exact);
    EXPECT_EQ(u.val_bound().value, GroupVal::fin(10));
    EXPECT_THROW(u.val(), PrecisionExhausted);
}

TEST(Series, InvertMultipliesBackToOne) {
    Sampler rng(3);
    for (int i = 0; i < 100; ++i) {
        Series a = rng.exact_unit_like(Q, rng.uniform(-2, 2), 3, rng.uniform(1, 2));
        Series inv = a.invert(40);
        Series one = a * inv;
        ASSERT_EQ(one.coeff(0), Scalar::one(Q));
        for (const auto& [e, c] : one.support())
            if (e != 0) {
                ASSERT_TRUE(c.is_zero()) << e.get_str();
            }
        // the inverse is known to O(t^40), so the product to O(t^(40 + v(a)))
        GroupVal expect = a.terms().size() == 1 ? GroupVal::inf() : GroupVal::fin(40) + a.val();
        ASSERT_EQ(one.prec(), expect);
    }
}

TEST(Series, InvertGeometric) {
    // 1/(1 - t) = sum t^n
    Series inv = (Series::integer(Q, 1) - t_power(Q, 1)).invert(10);
    for (long n = 0; n < 10; ++n) EXPECT_EQ(inv.coeff(Rational(n)), Scalar::one(Q));
}

TEST(Series, InexactInvertLosesTwiceTheValuation) {
    Series a = parse_series("t^2 + t^3 + O(t^10)", Q);
    EXPECT_EQ(a.invert(64).prec(), GroupVal::fin(6));
}

TEST(Series, RamificationAligns) {
    Series a = t_power(Q, make_rational(1, 2));
    Series b = t_power(Q, make_rational(1, 3));
    Series c = a * b;
    EXPECT_EQ(c.ram(), 6);
    EXPECT_EQ(c.val(), GroupVal::fin(make_rational(5, 6)));
    EXPECT_EQ((a + b).val(), GroupVal::fin(make_rational(1, 3)));
}

TEST(Series, PrimeFieldArithmetic) {
    Field f2 = Field::prime(2);
    Series a = t_power(f2, 1) + Series::integer(f2, 1);
    EXPECT_EQ(a * a, t_power(f2, 2) + Series::integer(f2, 1));
    EXPECT_TRUE((a + a).is_exact_zero());
}

TEST(Series, FieldMismatch) {
    EXPECT_THROW(t_power(Q, 1) + t_power(Field::prime(3), 1), FieldMismatch);
}

TEST(Series, TextRoundTrip) {
    Series s = parse_series("3/2*t^(-1) + t^(1/2) - 4*t^3 + O(t^(7/2))", Q);
    EXPECT_EQ(parse_series(s.str(), Q), s);
    EXPECT_EQ(s.val(), GroupVal::fin(-1));
    EXPECT_EQ(s.prec(), GroupVal::fin(make_rational(7, 2)));
}

TEST(RatFunc, CoerceAndTruncate) {
    // 1/(1 - t) at precision 6
    RatFunc r = RatFunc::fraction(TPoly::constant(Scalar::one(Q)),
                                  TPoly(Q, {Scalar::one(Q), Scalar::from_integer(Q, -1)}));
    Series s = coerce(r, 6);
    for (long n = 0; n < 6; ++n) EXPECT_EQ(s.coeff(Rational(n)), Scalar::one(Q));
    EXPECT_EQ(s.prec(), GroupVal::fin(6));
    RatFunc tr = truncate_to_ratfunc(s, 3);
    EXPECT_EQ(coerce(tr, 10), parse_series("1 + t + t^2", Q));
}

TEST(RatFunc, FromSeriesNeedsExactLaurent) {
    EXPECT_TRUE(RatFunc::from_series(parse_series("t^-2 + 3", Q)).has_value());
    EXPECT_FALSE(RatFunc::from_series(parse_series("1 + O(t^4)", Q)).has_value());
}

TEST(Series, ResidueIsConstantTerm) {
    EXPECT_EQ(residue(parse_series("5 + t + O(t^3)", Q)), Scalar::from_integer(Q, 5));
}
