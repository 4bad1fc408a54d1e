#include <gtest/gtest.h>

#include "printers.hpp"
#include "valwb/algnum.hpp"
#include "valwb/examples.hpp"
#include "valwb/text.hpp"

using namespace valwb;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);
Field F7 = Field::prime(7);

PolyK K(const char* text, Field f = Q) { return parse_poly_k(text, f); }

}  // namespace

TEST(AttachMinpoly, ArtinSchreierCertified) {
    AlgElement a = artin_schreier_center(2, 65);
    EXPECT_EQ(degree(a), 2);
    EXPECT_TRUE(a.artin_schreier);
}

TEST(AttachMinpoly, SqrtCertified) {
    AlgElement a = attach_minpoly(parse_series("t^(1/2) + O(t^10)", Q), K("X^2 - t"));
    EXPECT_EQ(degree(a), 2);
}

TEST(AttachMinpoly, WrongRootRejected) {
    EXPECT_THROW(attach_minpoly(parse_series("t + O(t^10)", Q), K("X^2 - t")), NotARoot);
}

TEST(Degree, PureRamificationAndUncertified) {
    EXPECT_EQ(degree(AlgElement::plain(t_power(Q, make_rational(1, 2)))), 2);
    EXPECT_THROW(degree(AlgElement::plain(parse_series("t^(1/2) + O(t^9)", Q))), Uncertified);
}

TEST(GaloisTwist, RootsOfUnity) {
    AlgElement s = attach_minpoly(t_power(Q, make_rational(1, 2)), K("X^2 - t"), true);
    EXPECT_EQ(galois_twist(s, 1).expansion, -t_power(Q, make_rational(1, 2)));
    EXPECT_EQ(galois_twist(s, 0).expansion, s.expansion);

    AlgElement c = attach_minpoly(t_power(F7, make_rational(1, 3)), K("X^3 - t", F7), true);
    Series tw = galois_twist(c, 1).expansion;
    EXPECT_EQ(tw, Series::monomial(Scalar::from_integer(F7, 2), make_rational(1, 3)));
    // oracle: 2^3 = 1 in F_7 and the twist is again a root of X^3 - t
    EXPECT_TRUE(Scalar::from_integer(F7, 2).pow(3).is_one());
    EXPECT_TRUE(to_series_poly(K("X^3 - t", F7), 64)(tw).is_exact_zero());
}

// Oracle: maximum pairwise difference valuation of the explicit conjugates.
TEST(Krasner, PairwiseOracle) {
    Series r = t_power(Q, make_rational(1, 2));
    EXPECT_EQ((r - (-r)).val(), GroupVal::fin(make_rational(1, 2)));
    AlgElement s = attach_minpoly(r, K("X^2 - t"), true);
    EXPECT_EQ(krasner_constant(s), GroupVal::fin(make_rational(1, 2)));
    EXPECT_EQ(krasner_constant_conjugates(s), krasner_constant_polygon(s));

    AlgElement c = attach_minpoly(t_power(F7, make_rational(1, 3)), K("X^3 - t", F7), true);
    GroupVal best = GroupVal::fin(-1000);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            if (i != j) best = max(best, (galois_twist(c, i).expansion - galois_twist(c, j).expansion).val());
    EXPECT_EQ(best, GroupVal::fin(make_rational(1, 3)));
    EXPECT_EQ(krasner_constant(c), best);
    EXPECT_EQ(krasner_constant_polygon(c), best);
}

TEST(Krasner, DegreeOneIsUndefined) {
    AlgElement a = attach_minpoly(t_power(Q, 1), K("X - t"), true);
    EXPECT_THROW(krasner_constant(a), Error);
}

TEST(CompletionRoot, ArtinSchreierLinearFactor) {
    AlgElement a = artin_schreier_center(2, 65);
    CompletionRoot r = minpoly_over_completion(a, 64);
    ASSERT_TRUE(r.found) << r.note;
    // matches sum t^(2^n) below t^64
    for (long n = 0; n <= 5; ++n) EXPECT_TRUE(r.root.coeff(Rational(1L << n)).is_one());
    EXPECT_GE(r.root.prec(), GroupVal::fin(64));
    EXPECT_GE((r.root - a.expansion).val_bound().value, GroupVal::fin(64));
}

TEST(CompletionRoot, SqrtHasNoRootInCompletion) {
    AlgElement s = attach_minpoly(t_power(Q, make_rational(1, 2)), K("X^2 - t"), true);
    EXPECT_FALSE(minpoly_over_completion(s, 64).found);
}

TEST(CompletionRoot, ElementOfK) {
    AlgElement a = attach_minpoly(parse_series("1 + t", Q), K("X - 1 - t"), true);
    CompletionRoot r = minpoly_over_completion(a, 64);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(r.root.with_prec(GroupVal::inf()), parse_series("1 + t", Q));
}
