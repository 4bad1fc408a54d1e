#include <gtest/gtest.h>

#include "printers.hpp"
#include "valwb/examples.hpp"
#include "valwb/sampling.hpp"
#include "valwb/text.hpp"
#include "valwb/valuation.hpp"

using namespace valwb;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);

PolyS P(const char* text, Field f = Q) { return parse_poly(text, f); }
GroupVal fin(long a, long b = 1) { return GroupVal::fin(a, b); }

Series a_m(long m) {
    Series s = Series::zero(F2);
    for (long n = 0; n <= m; ++n) s = s + t_power(F2, Rational(1L << n));
    return s;
}

}  // namespace

TEST(Eval, Gauss) {
    EXPECT_EQ(eval(ValuationSpec::gauss(), P("t*X^2 + X + t^3")), fin(0));
}

TEST(Eval, MonomialAtZero) {
    auto v = ValuationSpec::monomial(Series::zero(Q), fin(1, 3));
    EXPECT_EQ(eval(v, P("X^2 - t")), fin(2, 3));
    // oracle via roots +-t^(1/2): min(1/3, 1/2) twice
    EXPECT_EQ(fin(1, 3) + fin(1, 3), fin(2, 3));
    EXPECT_EQ(delta(v, P("X^2 - t")), fin(1, 3));
}

TEST(Eval, ArtinSchreierCenter) {
    auto v = ValuationSpec::monomial(artin_schreier_center(2, 129), GroupVal::lex(1, 0));
    EXPECT_EQ(eval(v, PolyS::linear(a_m(2))), fin(8));
    for (long m = 0; m <= 5; ++m) EXPECT_EQ(delta(v, PolyS::linear(a_m(m))), fin(2L << m));
    EXPECT_EQ(eval(v, P("X^2 - X + t", F2)), GroupVal::lex(1, 0));
}

TEST(Delta, LinearAtCenterIsGamma) {
    Series a = parse_series("t^(1/2) + t", Q);
    auto v = ValuationSpec::monomial(a, fin(5, 4));
    EXPECT_EQ(delta(v, PolyS::linear(a)), fin(5, 4));
}

TEST(Delta, ExponentialPrefix) {
    auto v = ValuationSpec::monomial(PcsGenerator::exponential(30).element(30), GroupVal::lex(1, 0));
    auto gen = PcsGenerator::exponential(30);
    for (long m = 0; m <= 10; ++m) EXPECT_EQ(delta(v, PolyS::linear(gen.element(m))), fin(m + 1));
}

TEST(EvalRational, Examples) {
    auto g = ValuationSpec::gauss();
    EXPECT_EQ(eval_rational(g, P("t*X^2 + 1"), P("t*X^2 + 1")), fin(0));
    EXPECT_EQ(eval_rational(g, P("t*X"), P("X")), fin(1));
    auto m = ValuationSpec::monomial(Series::zero(Q), fin(1, 3));
    EXPECT_EQ(eval_rational(m, P("X^2 - t"), P("X")), fin(1, 3));
}

// Oracle: for exact f split into linear factors, v_{a,gamma} f = v(lc) + sum min(gamma, v(a - z)).
TEST(Eval, RootFormulaOracle) {
    Sampler rng(17);
    Series a = parse_series("t^(1/2) + 2*t", Q);
    GroupVal gamma = fin(3, 2);
    auto v = ValuationSpec::monomial(a, gamma);
    for (int i = 0; i < 200; ++i) {
        Series lc = rng.exact_unit_like(Q, rng.uniform(-1, 2), 2);
        PolyS f = PolyS::constant(lc);
        GroupVal expect = lc.val();
        GroupVal deepest = GroupVal::fin(-1000);
        long n = rng.uniform(1, 3);
        for (long j = 0; j < n; ++j) {
            Series z = rng.exact_coeff(Q, 0, 4, 2);
            f = f * PolyS::linear(z);
            GroupVal d = min(gamma, (a - z).val());
            expect = expect + d;
            deepest = max(deepest, d);
        }
        ASSERT_EQ(eval(v, f), expect) << f.str();
        ASSERT_EQ(delta(v, f), deepest) << f.str();
    }
}

TEST(PairEquivalence, Examples) {
    Series a = a_m(6);
    EXPECT_TRUE(is_pair_equivalent(a, a_m(1), fin(4)));
    EXPECT_TRUE(is_pair_equivalent(a, a, fin(4)));
    EXPECT_FALSE(is_pair_equivalent(a, a_m(0), fin(4)));
}

TEST(KeyPolynomial, LinearIsKey) {
    auto v = ValuationSpec::monomial(artin_schreier_center(2, 129), GroupVal::lex(1, 0));
    auto r = is_key_polynomial(v, PolyS::linear(a_m(3)), 50, {}, 1);
    EXPECT_FALSE(r.counterexample);
}

TEST(KeyPolynomial, CounterexampleX) {
    auto v = ValuationSpec::monomial(Series::zero(Q), fin(1, 3));
    auto r = is_key_polynomial(v, P("X^2 - t"), 50, {}, 1);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(delta(v, r.witness), fin(1, 3));
}

TEST(KeyPolynomial, GaussX) {
    EXPECT_FALSE(is_key_polynomial(ValuationSpec::gauss(), P("X"), 20, {}, 1).counterexample);
}

TEST(MinimalPair, Examples) {
    auto as = minimal_pair_search(artin_schreier_center(2, 129), GroupVal::lex(1, 0), {});
    EXPECT_FALSE(as.smaller_found);
    AlgElement s = attach_minpoly(t_power(Q, make_rational(1, 2)), parse_poly_k("X^2 - t", Q), true);
    auto sm = minimal_pair_search(s, fin(1, 4), {AlgElement::plain(Series::zero(Q))});
    ASSERT_TRUE(sm.smaller_found);
    EXPECT_TRUE(sm.smaller.is_exact_zero());
    auto k = minimal_pair_search(AlgElement::plain(t_power(Q, 1)), fin(7), {});
    EXPECT_FALSE(k.smaller_found);
}

TEST(KeyPolyValuation, AgreesWithMonomialOnK) {
    // KeyPoly(X^2 - t, 5/4) over Monomial(0, 1/2) is Monomial(t^(1/2), 3/4) on K[X]
    AlgElement s = attach_minpoly(t_power(Q, make_rational(1, 2)), parse_poly_k("X^2 - t", Q), true);
    auto key = ValuationSpec::keypoly(P("X^2 - t"), fin(5, 4), ValuationSpec::monomial(Series::zero(Q), fin(1, 2)),
                                      PairOfDefinition{s, fin(3, 4)});
    auto mono = ValuationSpec::monomial(s, fin(3, 4));
    Sampler rng(23);
    for (int i = 0; i < 200; ++i) {
        PolyS f = rng.poly(Q, rng.uniform(0, 4), false, [&] { return rng.exact_coeff(Q, 0, 3); });
        ASSERT_EQ(eval(key, f), eval(mono, f)) << f.str();
    }
}

TEST(Spec, Validation) {
    EXPECT_THROW(ValuationSpec::monomial(Series::zero(Q), GroupVal::inf()), Error);
    EXPECT_THROW(ValuationSpec::monomial(Series::zero(Q), GroupVal::lex(-1, 0)), Error);
    EXPECT_THROW(delta(ValuationSpec::gauss(), P("1 + t")), DomainError);
}

TEST(Spec, UnknownDigitIsPrecisionExhausted) {
    auto v = ValuationSpec::monomial(parse_series("t + O(t^5)", Q), fin(10));
    EXPECT_THROW(eval(v, P("X - t")), PrecisionExhausted);
}
