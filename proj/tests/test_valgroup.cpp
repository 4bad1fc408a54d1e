#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "printers.hpp"
#include "valwb/valgroup.hpp"

using namespace valwb;

TEST(GroupVal, LexOrderExamples) {
    EXPECT_LT(GroupVal::fin(5), GroupVal::lex(1, -3));
    EXPECT_LT(GroupVal::lex(1, -3), GroupVal::lex(1, 0));
    EXPECT_LT(GroupVal::lex(1, 0), GroupVal::lex(2, -100));
    EXPECT_LT(GroupVal::lex(2, -100), GroupVal::inf());
    EXPECT_EQ(GroupVal::fin(2) + GroupVal::lex(1, 0), GroupVal::lex(1, 2));
}

TEST(GroupVal, FinIsLexWithZeroTop) {
    EXPECT_EQ(GroupVal::fin(make_rational(7, 3)), GroupVal::lex(0, make_rational(7, 3)));
    EXPECT_TRUE(GroupVal::lex(0, 1).is_fin());
}

TEST(GroupVal, InfAbsorbs) {
    EXPECT_TRUE((GroupVal::inf() + GroupVal::fin(3)).is_inf());
    EXPECT_TRUE((GroupVal::lex(1, 0) + GroupVal::inf()).is_inf());
    EXPECT_TRUE(GroupVal::inf().times(4).is_inf());
}

// Oracle: compare as pairs (z, q) with inf on top.
TEST(GroupVal, OrderMatchesPairOracle) {
    std::mt19937_64 rng(7);
    std::vector<std::pair<long, Rational>> raw;
    std::vector<GroupVal> vals;
    for (int i = 0; i < 200; ++i) {
        long z = static_cast<long>(rng() % 3);
        Rational q = make_rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 4) + 1);
        raw.emplace_back(z, q);
        vals.push_back(GroupVal::lex(z, q));
    }
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = 0; j < raw.size(); ++j) {
            bool less = raw[i].first != raw[j].first ? raw[i].first < raw[j].first : raw[i].second < raw[j].second;
            ASSERT_EQ(vals[i] < vals[j], less);
        }
}

TEST(GroupVal, AdditionIsComponentwise) {
    EXPECT_EQ(GroupVal::lex(1, make_rational(1, 2)) - GroupVal::fin(make_rational(1, 2)), GroupVal::lex(1, 0));
    EXPECT_EQ(GroupVal::lex(1, 2).times(3), GroupVal::lex(3, 6));
}

TEST(GroupVal, TextForms) {
    EXPECT_EQ(GroupVal::fin(make_rational(3, 4)).str(), "3/4");
    EXPECT_EQ(GroupVal::lex(1, 0).str(), "(1, 0)");
    EXPECT_EQ(GroupVal::inf().str(), "inf");
}

TEST(GroupVal, JsonRoundTrip) {
    for (const auto& v : {GroupVal::fin(make_rational(-5, 6)), GroupVal::lex(2, make_rational(1, 3)), GroupVal::inf()})
        EXPECT_EQ(GroupVal::from_json(v.to_json()), v);
    EXPECT_EQ(GroupVal::fin(make_rational(3, 4)).to_json().dump(), R"({"fin":"3/4"})");
    EXPECT_EQ(GroupVal::lex(1, 0).to_json().dump(), R"({"lex":[1,"0"]})");
    EXPECT_EQ(GroupVal::inf().to_json().dump(), R"({"inf":true})");
}

TEST(MinAccumulator, InexactTermBlocksDecision) {
    MinAccumulator m;
    m.add(ValueBound::exactly(GroupVal::fin(3)));
    m.add(ValueBound::at_least(GroupVal::fin(5)));
    EXPECT_TRUE(m.result().exact);
    EXPECT_EQ(m.result().value, GroupVal::fin(3));

    MinAccumulator n;
    n.add(ValueBound::exactly(GroupVal::fin(3)));
    n.add(ValueBound::at_least(GroupVal::fin(2)));
    EXPECT_FALSE(n.result().exact);
    EXPECT_EQ(n.result().value, GroupVal::fin(2));
}

TEST(ValueBound, Proofs) {
    auto b = ValueBound::at_least(GroupVal::fin(4));
    EXPECT_TRUE(b.proves_at_least(GroupVal::fin(4)));
    EXPECT_TRUE(b.proves_greater_than(GroupVal::fin(3)));
    EXPECT_FALSE(b.proves_greater_than(GroupVal::fin(4)));
}
