#include <gtest/gtest.h>

#include "printers.hpp"
#include "valwb/poly.hpp"
#include "valwb/sampling.hpp"
#include "valwb/text.hpp"

using namespace valwb;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);

PolyS P(const char* text, Field f = Q) { return parse_poly(text, f); }
Series S(const char* text, Field f = Q) { return parse_series(text, f); }

// Sum of C_i (X - a)^i.
PolyS reexpand(const std::vector<Series>& c, const Series& a) {
    PolyS lin = PolyS::x(a.field()) - PolyS::constant(a);
    PolyS out(a.field());
    PolyS pw = PolyS::constant(Series::integer(a.field(), 1));
    for (const auto& ci : c) {
        out = out + pw * PolyS::constant(ci);
        pw = pw * lin;
    }
    return out;
}

// Sum of f_i Q^i.
PolyS recombine(const std::vector<PolyS>& digits, const PolyS& q) {
    PolyS out(q.field());
    PolyS pw = PolyS::constant(Series::integer(q.field(), 1));
    for (const auto& d : digits) {
        out = out + d * pw;
        pw = pw * q;
    }
    return out;
}

Series a_m(long m) {
    Series s = Series::zero(F2);
    for (long n = 0; n <= m; ++n) s = s + t_power(F2, Rational(1L << n));
    return s;
}

}  // namespace

TEST(Recenter, WorkedExample) {
    auto c = recenter_hasse(P("X^2 + X + 1"), S("t"));
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], S("t^2 + t + 1"));
    EXPECT_EQ(c[1], S("2*t + 1"));
    EXPECT_EQ(c[2], S("1"));
}

TEST(Recenter, AtZeroIsIdentity) {
    PolyS f = P("3*X^3 - t*X + t^(1/2)");
    auto c = recenter_hasse(f, Series::zero(Q));
    for (long i = 0; i <= f.degree(); ++i) EXPECT_EQ(c[static_cast<std::size_t>(i)], f.coeff(i));
}

TEST(Recenter, SqrtRootGivesExactZero) {
    auto c = recenter_hasse(P("X^2 - t"), t_power(Q, make_rational(1, 2)));
    EXPECT_TRUE(c[0].is_exact_zero());
    EXPECT_EQ(c[1], S("2*t^(1/2)"));
    EXPECT_EQ(c[2], S("1"));
}

TEST(Recenter, ReexpansionOracle) {
    Sampler rng(5);
    for (int i = 0; i < 100; ++i) {
        Field f = i % 2 ? Q : Field::prime(3);
        PolyS p = rng.poly(f, rng.uniform(0, 4), false, [&] { return rng.exact_coeff(f, -1, 3, 2); });
        Series a = rng.exact_coeff(f, 0, 3, 3);
        ASSERT_EQ(reexpand(recenter_hasse(p, a), a), p) << p.str() << " at " << a.str();
    }
}

TEST(Recenter, HasseInCharacteristicTwo) {
    // X^4 at a: C_2 = binom(4,2) a^2 = 6a^2 = 0 in F_2, C_4 = 1
    Series a = S("1 + t", F2);
    auto c = recenter_hasse(P("X^4", F2), a);
    EXPECT_TRUE(c[2].is_exact_zero());
    EXPECT_EQ(reexpand(c, a), P("X^4", F2));
    EXPECT_EQ(hasse_derivative(P("X^4", F2), 2), PolyS(F2));
}

TEST(QAdic, WorkedExample) {
    auto d = qadic_expand(P("X^3"), P("X^2 - t"));
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], P("t*X"));
    EXPECT_EQ(d[1], P("X"));
}

TEST(QAdic, SmallAndSelf) {
    PolyS q = P("X^2 - t");
    auto d = qadic_expand(P("X + 1"), q);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0], P("X + 1"));
    auto e = qadic_expand(q, q);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_TRUE(e[0].is_zero());
    EXPECT_EQ(e[1], P("1"));
}

TEST(QAdic, RecombinationOracle) {
    Sampler rng(9);
    for (int i = 0; i < 100; ++i) {
        PolyS q = rng.poly(Q, rng.uniform(1, 3), true, [&] { return rng.exact_coeff(Q, 0, 3); });
        PolyS f = rng.poly(Q, rng.uniform(0, 7), false, [&] { return rng.exact_coeff(Q, 0, 3); });
        auto d = qadic_expand(f, q);
        for (const auto& di : d) ASSERT_LT(di.degree(), q.degree());
        ASSERT_EQ(recombine(d, q), f);
    }
}

TEST(DivMod, MultiplyBack) {
    Sampler rng(13);
    for (int i = 0; i < 100; ++i) {
        PolyS b = rng.poly(Q, rng.uniform(1, 3), true, [&] { return rng.exact_coeff(Q, 0, 2); });
        PolyS a = rng.poly(Q, rng.uniform(0, 6), false, [&] { return rng.exact_coeff(Q, 0, 2); });
        auto [quo, rem] = PolyS::divmod_monic(a, b);
        ASSERT_LT(rem.degree(), b.degree());
        ASSERT_EQ(quo * b + rem, a);
    }
}

TEST(NewtonPolygon, Examples) {
    NewtonPolygon sq = {{GroupVal::fin(make_rational(1, 2)), 2}};
    EXPECT_EQ(newton_polygon(P("X^2 - t"), Series::zero(Q)), sq);
    NewtonPolygon two = {{GroupVal::fin(1), 2}};
    EXPECT_EQ(newton_polygon(P("X^2 - 3*t*X + 2*t^2"), Series::zero(Q)), two);
    NewtonPolygon withzero = {{GroupVal::inf(), 1}, {GroupVal::fin(1), 1}};
    EXPECT_EQ(newton_polygon(P("X*(X - t)"), Series::zero(Q)), withzero);
}

// Oracle: polygon of a product of known linear factors is the multiset of v(root).
TEST(NewtonPolygon, FactoredOracle) {
    Sampler rng(21);
    for (int i = 0; i < 100; ++i) {
        long n = rng.uniform(1, 4);
        PolyS f = PolyS::constant(Series::integer(Q, 1));
        std::map<Rational, long, std::greater<>> expect;
        for (long j = 0; j < n; ++j) {
            Rational e = make_rational(rng.uniform(0, 6), rng.uniform(1, 3));
            expect[e] += 1;
            f = f * PolyS::linear(Series::monomial(rng.nonzero_scalar(Q), e));
        }
        NewtonPolygon got = newton_polygon(f, Series::zero(Q));
        ASSERT_EQ(total_multiplicity(got), n);
        NewtonPolygon want;
        for (const auto& [e, m] : expect) want.push_back({GroupVal::fin(e), m});
        // Cancellation between equal-valuation roots can only raise a slope,
        // so compare only when the slopes are distinct.
        if (expect.size() == static_cast<std::size_t>(n)) {
            ASSERT_EQ(got, want) << f.str();
        }
    }
}

TEST(Evaluate, ArtinSchreierIdentity) {
    // a_m^2 - a_m + t = t^(2^(m+1)) in characteristic 2
    PolyS q = P("X^2 - X + t", F2);
    for (long m = 0; m <= 5; ++m) EXPECT_EQ(q(a_m(m)), t_power(F2, Rational(2L << m)));
    EXPECT_EQ(q(a_m(5)).val(), GroupVal::fin(64));
}

TEST(Evaluate, Basics) {
    EXPECT_TRUE(P("X^2 - t")(t_power(Q, make_rational(1, 2))).is_exact_zero());
    EXPECT_EQ(P("7")(S("t + 3")), S("7"));
}

TEST(ExactOverK, DetectsTails) {
    EXPECT_TRUE(exact_over_k(P("t^-1*X + 3")).has_value());
    EXPECT_FALSE(exact_over_k(P("(1 + O(t^5))*X")).has_value());
    EXPECT_FALSE(exact_over_k(P("t^(1/2)*X")).has_value());
}
