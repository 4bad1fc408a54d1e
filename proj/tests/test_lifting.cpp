#include <gtest/gtest.h>

#include "printers.hpp"
#include "valwb/examples.hpp"
#include "valwb/lifting.hpp"
#include "valwb/text.hpp"

using namespace valwb;
using valwb::detail::lift;

namespace {

Field Q = Field::rationals();
Field F2 = Field::prime(2);

PolyS P(const char* text, Field f = Q) { return parse_poly(text, f); }
GroupVal fin(long a, long b = 1) { return GroupVal::fin(a, b); }

ValuationSpec ex61() { return ValuationSpec::monomial(artin_schreier_center(2, 129), GroupVal::lex(1, 0)); }

std::vector<PolyS> as_keys(long upto) {
    auto gen = PcsGenerator::artin_schreier(2, upto);
    std::vector<PolyS> out;
    for (long m = 0; m <= upto; ++m) out.push_back(PolyS::linear(gen.element(m)));
    return out;
}

}  // namespace

TEST(Classify, Examples) {
    EXPECT_EQ(classify_extension(ex61()).kind, ExtensionKind::ValueTranscendentalUniquePair);
    EXPECT_EQ(classify_extension(ValuationSpec::pcs_limit(PcsGenerator::exponential(14))).kind,
              ExtensionKind::ValuationAlgebraicTypeII);
    auto c = classify_extension(ValuationSpec::pcs_limit(PcsGenerator::mixed_radix(2, 3)));
    EXPECT_EQ(c.kind, ExtensionKind::ValuationAlgebraicTypeI);
    EXPECT_EQ(classify_extension(ValuationSpec::gauss()).kind, ExtensionKind::ResidueTranscendental);
    EXPECT_EQ(classify_extension(ValuationSpec::monomial(Series::zero(Q), fin(1, 3))).kind,
              ExtensionKind::ResidueTranscendental);
}

TEST(Induce, ExponentialBecomesMonomial) {
    Induced ind = induce(ValuationSpec::pcs_limit(PcsGenerator::exponential(14)));
    ASSERT_TRUE(ind.spec.is_monomial());
    EXPECT_EQ(ind.spec.as_monomial().gamma, GroupVal::lex(1, 0));
    EXPECT_TRUE(is_limit(ind.spec.as_monomial().center.expansion, PcsGenerator::exponential(14)));
    EXPECT_EQ(ind.spec.tag(), FieldTag::OverKhat);
}

TEST(Induce, MixedRadixStaysALimit) {
    Induced ind = induce(ValuationSpec::pcs_limit(PcsGenerator::mixed_radix(2, 3)));
    EXPECT_TRUE(ind.spec.is_pcs_limit());
    EXPECT_EQ(ind.spec.tag(), FieldTag::OverKhat);
}

TEST(Induce, MonomialRetag) {
    auto v = ValuationSpec::monomial(t_power(Q, 1), fin(2));
    Induced ind = induce(v);
    EXPECT_EQ(ind.spec.as_monomial().center.expansion, t_power(Q, 1));
    EXPECT_EQ(ind.spec.as_monomial().gamma, fin(2));
}

TEST(Cskp, WitnessForX) {
    auto v = ex61();
    auto seq = CskpSeq::from_polys(as_keys(5), v);
    auto w = cskp_check(seq, P("X", F2), v);
    ASSERT_TRUE(w.found);
    EXPECT_EQ(w.index, 0);
    EXPECT_TRUE(cskp_check(seq, P("1 + t", F2), v).found);
}

TEST(Cskp, ArtinSchreierPolynomialHasNoWitness) {
    auto v = ex61();
    auto seq = CskpSeq::from_polys(as_keys(5), v);
    EXPECT_FALSE(cskp_check(seq, P("X^2 - X + t", F2), v).found);
}

// f = c (X - t) to the working precision: the 0-th digit at X - t vanishes
// to O(t^64) and only bounds its term from below.
TEST(Cskp, DigitVanishingToPrecision) {
    auto v = ex61();
    auto seq = CskpSeq::from_polys(as_keys(5), v);
    PolyS f = P("(t + t^2 + t^31 + O(t^64))*X + (t^2 + t^3 + t^32 + O(t^64))", F2);
    EXPECT_EQ(eval(v, f), fin(3));
    auto w = cskp_check(seq, f, v);
    ASSERT_TRUE(w.found);
    EXPECT_EQ(w.index, 0);
}

TEST(Cskp, DeltasMustIncrease) {
    auto v = ex61();
    EXPECT_THROW(CskpSeq::from_polys({P("X + t", F2), P("X", F2)}, v), Error);
}

TEST(Lift, ArtinSchreierReplacesQa) {
    auto v = ex61();
    auto keys = as_keys(5);
    keys.push_back(P("X^2 - X + t", F2));
    LiftResult lr = lift_cskp(CskpSeq::from_polys(keys, v), v);
    const auto& e = lr.seq.entries();
    ASSERT_EQ(e.size(), 7u);
    EXPECT_EQ(e.back().q.degree(), 1);
    Series root = -e.back().q.coeff(0);
    for (long n = 0; n <= 5; ++n) EXPECT_TRUE(root.coeff(Rational(1L << n)).is_one());
    EXPECT_EQ(e.back().delta, GroupVal::lex(1, 0));
}

TEST(Lift, ExponentialAppendsLimit) {
    auto spec = ValuationSpec::pcs_limit(PcsGenerator::exponential(14));
    auto gen = PcsGenerator::exponential(14);
    std::vector<PolyS> keys;
    for (long m = 0; m <= 5; ++m) keys.push_back(PolyS::linear(gen.element(m)));
    LiftResult lr = lift_cskp(CskpSeq::from_polys(keys, spec), spec);
    ASSERT_EQ(lr.seq.entries().size(), 7u);
    EXPECT_TRUE(is_limit(-lr.seq.entries().back().q.coeff(0), gen));
}

TEST(Lift, MixedRadixUnchanged) {
    auto spec = ValuationSpec::pcs_limit(PcsGenerator::mixed_radix(2, 3));
    auto gen = PcsGenerator::mixed_radix(2, 3);
    std::vector<PolyS> keys;
    for (long m = 0; m <= 3; ++m) keys.push_back(PolyS::linear(gen.element(m)));
    auto seq = CskpSeq::from_polys(keys, spec);
    LiftResult lr = lift_cskp(seq, spec);
    ASSERT_EQ(lr.seq.entries().size(), seq.entries().size());
    for (std::size_t i = 0; i < seq.entries().size(); ++i) EXPECT_EQ(lr.seq.entries()[i].q, seq.entries()[i].q);
}

TEST(Threshold, Formula) {
    EXPECT_EQ(roots_matching_threshold(P("X - t"), fin(2)), fin(2));
    EXPECT_EQ(roots_matching_threshold(P("X^2 - t"), fin(1)), fin(4));
    EXPECT_EQ(roots_matching_threshold(P("t*X^2 - t"), fin(1)), fin(5));
}

TEST(SameDelta, TruncatesDeepTail) {
    PolyS f = P("X - (t + t^4 + O(t^40))");
    auto r = approximate_same_delta(f, fin(10), ValuationSpec::gauss(FieldTag::OverKhat));
    EXPECT_TRUE(all_passed(r.checks));
    EXPECT_EQ(lift(r.f), P("X - t - t^4"));
}

TEST(SameDelta, AlreadyOverK) {
    PolyS f = P("X^2 + t*X - 1");
    auto r = approximate_same_delta(f, fin(3), ValuationSpec::gauss());
    EXPECT_EQ(lift(r.f), f);
}

TEST(SameDelta, UnitTimesT) {
    auto v = ValuationSpec::monomial(Series::zero(Q), fin(1, 3), FieldTag::OverKhat);
    PolyS f = P("X^2 - (1 + t + t^2/2 + t^3/6 + t^4/24 + O(t^64))*t");
    auto r = approximate_same_delta(f, fin(3), v);
    EXPECT_TRUE(all_passed(r.checks));
    EXPECT_EQ(delta(v, lift(r.f)), fin(1, 3));
}

TEST(Density, ExponentialCoefficient) {
    Series a = PcsGenerator::exponential(70).element(70).with_prec(GroupVal::fin(64));
    PolyS f = PolyS::x(Q) * PolyS::constant(a) + PolyS::constant(Series::integer(Q, 1));
    PolyS g = PolyS::constant(Series::integer(Q, 1));
    auto spec = ValuationSpec::gauss(FieldTag::OverKhat);
    DensityResult d = approximate_density(f, g, fin(5), spec);
    EXPECT_TRUE(all_passed(d.checks));
    // direct re-check of the conditions named in the worked example
    PolyS fp = to_series_poly(d.f, 64);
    EXPECT_GE(eval(spec, f - fp), fin(6));
    EXPECT_EQ(eval(spec, fp), fin(0));
    EXPECT_EQ(to_series_poly(d.g, 64), g);
}

TEST(Density, AlreadyOverK) {
    PolyS f = P("X + t"), g = P("X^2 + 1");
    DensityResult d = approximate_density(f, g, fin(4), ValuationSpec::gauss());
    EXPECT_EQ(lift(d.f), f);
    EXPECT_EQ(lift(d.g), g);
}

TEST(Density, ObstructedKinds) {
    try {
        approximate_density(P("X"), P("1"), fin(3), ValuationSpec::monomial(t_power(Q, 1), GroupVal::lex(1, 0)));
        FAIL();
    } catch (const UnsupportedKind& e) {
        EXPECT_NE(std::string(e.what()).find("density obstruction"), std::string::npos);
    }
    EXPECT_THROW(approximate_density(P("X"), P("1"), fin(3), ValuationSpec::pcs_limit(PcsGenerator::exponential(14))),
                 UnsupportedKind);
}

TEST(Uniqueness, EquivalentCenters) {
    AlgElement a = AlgElement::plain(t_power(Q, make_rational(1, 2)));
    AlgElement b = AlgElement::plain(t_power(Q, make_rational(1, 2)) + t_power(Q, 1));
    std::vector<PolyS> samples = {P("X"), P("X^2 - t"), P("X - t^(1/2)"), P("t*X^3 + X - 1")};
    auto u = uniqueness_check({a, fin(3, 4)}, {b, fin(3, 4)}, samples);
    EXPECT_TRUE(u.discrepancies.empty());
    EXPECT_EQ(u.agreements, 4);
}

TEST(Conjugacy, SqrtFixture) {
    AlgElement s = attach_minpoly(t_power(Q, make_rational(1, 2)), parse_poly_k("X^2 - t", Q), true);
    auto r = conjugacy_check(s, fin(3, 4), 1);
    EXPECT_EQ(r.twisted.expansion, -t_power(Q, make_rational(1, 2)));
    EXPECT_TRUE(r.shares_minpoly);
    EXPECT_TRUE(r.same_kind);
    EXPECT_EQ(r.kind, ExtensionKind::ResidueTranscendental);
    EXPECT_EQ(conjugacy_check(s, fin(3, 4), 0).twisted.expansion, s.expansion);
}
