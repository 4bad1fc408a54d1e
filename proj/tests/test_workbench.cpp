#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "printers.hpp"
#include "valwb/workbench.hpp"

using namespace valwb;

namespace {

const char* kGauss = R"J({"base_field": {"char": 0}, "spec": {"gauss": {}}})J";

int run(CliOptions o, std::string& out, std::string& err) {
    std::ostringstream os, es;
    int code = run_cli(o, os, es);
    out = os.str();
    err = es.str();
    return code;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST(Parser, ReportsLineAndColumn) {
    try {
        parse_poly("X^2 +\n  t*X )", Field::rationals());
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("2:7"), std::string::npos) << e.what();
    }
}

TEST(Parser, RejectsDivisionByX) {
    EXPECT_THROW(parse_poly("1/X", Field::rationals()), ParseError);
    EXPECT_THROW(parse_poly("X^(1/2)", Field::rationals()), ParseError);
}

TEST(Parser, DivisionBySeries) {
    // the inverse of 1 + t is taken to O(t^5), so t^2 times it is known to O(t^7)
    Series s = parse_series("t^2/(1 + t)", Field::rationals(), 5);
    EXPECT_EQ(s.with_prec(GroupVal::fin(5)), parse_series("t^2 - t^3 + t^4 + O(t^5)", Field::rationals()));
    EXPECT_EQ(s.prec(), GroupVal::fin(7));
}

TEST(Config, UnknownKeyIsNamed) {
    try {
        config_from_text(R"J({"spec": {"monomial": {"center": "t", "gamma": "1", "colour": 3}}})J");
        FAIL();
    } catch (const InvalidSpec& e) {
        EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
    }
    EXPECT_THROW(config_from_text(R"J({"precsion": 64})J"), InvalidSpec);
}

TEST(Config, JsonSyntaxErrorHasPosition) {
    try {
        config_from_text("{\n  \"precision\": 64,\n  oops\n}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("3:"), std::string::npos) << e.what();
    }
}

TEST(Config, Invariants) {
    EXPECT_THROW(config_from_text(R"J({"precision": 0})J"), InvalidSpec);
    EXPECT_THROW(config_from_text(R"J({"horizon": 2})J"), InvalidSpec);
    auto c = config_from_text(R"J({"base_field": {"char": 7}, "precision": "129/2", "seed": 9})J");
    EXPECT_EQ(c.field, Field::prime(7));
    EXPECT_EQ(c.precision, make_rational(129, 2));
    EXPECT_EQ(c.seed, 9u);
}

TEST(Config, SpecKinds) {
    auto m = config_from_text(R"J({"spec": {"monomial": {"center": "t^(1/2)", "gamma": "3/4",
                                  "minpoly": "X^2 - t", "irreducible": true}}})J");
    ASSERT_TRUE(m.spec && m.spec->is_monomial());
    auto k = config_from_text(R"J({"spec": {"keypoly": {"Q": "X^2 - t", "vQ": "5/4",
                                  "base": {"monomial": {"center": "0", "gamma": "1/2"}},
                                  "pair": {"center": "t^(1/2)", "gamma": "3/4"}}}})J");
    ASSERT_TRUE(k.spec);
    EXPECT_EQ(eval(*k.spec, parse_poly("X^2 - t", Field::rationals())), GroupVal::fin(5, 4));
    auto p = config_from_text(R"J({"spec": {"pcslimit": {"generator": "mixed-radix(2,3)"}}})J");
    EXPECT_TRUE(p.spec && p.spec->is_pcs_limit());
    auto l = config_from_text(R"J({"spec": {"monomial": {"center": "t", "gamma": {"lex": [1, "0"]}}}})J");
    EXPECT_EQ(l.spec->as_monomial().gamma, GroupVal::lex(1, 0));
}

TEST(Config, PrecisionPriority) {
    ::unsetenv("VALWB_PREC");
    EXPECT_EQ(config_from_text("{}").precision, Rational(64));
    ::setenv("VALWB_PREC", "80", 1);
    EXPECT_EQ(config_from_text("{}").precision, Rational(80));
    EXPECT_EQ(config_from_text(R"J({"precision": 90})J").precision, Rational(90));
    EXPECT_EQ(config_from_text(R"J({"precision": 90})J", Rational(100)).precision, Rational(100));
    ::unsetenv("VALWB_PREC");
}

TEST(Report, StructuredRoundTrip) {
    Report r;
    Verdict v;
    v.operation = "eval";
    v.digest = digest("x");
    v.outcome = "3/4";
    v.citation = "valuation of a polynomial";
    v.caveats = {"a caveat with \"quotes\"\nand a newline"};
    v.add("value", R"J({"fin":"3/4"})J");
    r.add(v);
    v.passed = false;
    r.add(v);
    std::string s = r.structured();
    EXPECT_EQ(Report::parse_structured(s), r);
    EXPECT_EQ(Report::parse_structured(s).structured(), s);
    EXPECT_THROW(Report::parse_structured("{not json}\n"), ParseError);
}

TEST(Report, DigestIsStable) {
    EXPECT_EQ(digest(""), "cbf29ce484222325");
    EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");
}

TEST(Examples, AllPass) {
    WorkbenchConfig cfg;
    EXPECT_TRUE(run_example("6.1", 2, 0, cfg).passed());
    EXPECT_TRUE(run_example("6.1", 3, 0, cfg).passed());
    EXPECT_TRUE(run_example("6.2", 0, 0, cfg).passed());
    EXPECT_TRUE(run_example("6.3", 2, 3, cfg).passed());
    EXPECT_THROW(run_example("6.3", 3, 2, cfg), Error);
    EXPECT_THROW(run_example("6.4", 0, 0, cfg), Error);
}

TEST(Cli, EvalGauss) {
    CliOptions o;
    o.command = "eval";
    o.config = write_temp("gauss.json", kGauss);
    o.poly = "t*X^2 + X + t^3";
    o.format = OutputFormat::Structured;
    std::string out, err;
    ASSERT_EQ(run(o, out, err), 0) << err;
    Report r = Report::parse_structured(out);
    ASSERT_EQ(r.verdicts.size(), 1u);
    EXPECT_EQ(r.verdicts[0].outcome, "0");
}

TEST(Cli, ExitCodes) {
    std::string out, err;
    CliOptions bad;
    bad.command = "eval";
    bad.config = write_temp("gauss.json", kGauss);
    bad.poly = "X +* 1";
    EXPECT_EQ(run(bad, out, err), 1);
    EXPECT_NE(err.find("1:"), std::string::npos);

    CliOptions missing;
    missing.command = "delta";
    EXPECT_EQ(run(missing, out, err), 1);

    // no witness is a verdict-level failure
    CliOptions cs;
    cs.command = "cskp-check";
    cs.config = write_temp("as.json", R"J({"base_field": {"char": 2}, "precision": 129,
        "spec": {"monomial": {"center": {"limit": "artin-schreier(2)"}, "minpoly": "X^2 - X + t",
                 "irreducible": true, "gamma": {"lex": [1, "0"]}}}})J");
    cs.keys = {"X - t", "X - t - t^2"};
    cs.poly = "X^2 - X + t";
    EXPECT_EQ(run(cs, out, err), 2) << err;
    cs.poly = "X";
    EXPECT_EQ(run(cs, out, err), 0) << err;
}

TEST(Cli, ExampleDeterministic) {
    CliOptions o;
    o.command = "example";
    o.example_id = "6.2";
    o.format = OutputFormat::Structured;
    std::string a, b, err;
    ASSERT_EQ(run(o, a, err), 0) << err;
    ASSERT_EQ(run(o, b, err), 0);
    EXPECT_EQ(a, b);
}

TEST(Cli, DensityBlock) {
    CliOptions o;
    o.command = "density";
    o.config = write_temp("gauss_khat.json", R"J({"spec": {"gauss": {}}, "over": "Khat"})J");
    o.f = "(1 + t + t^2/2 + t^3/6 + t^4/24 + t^5/120 + t^6/720 + t^7/5040 + O(t^8))*X + 1";
    o.g = "1";
    o.alpha = "5";
    std::string out, err;
    ASSERT_EQ(run(o, out, err), 0) << err;
    EXPECT_NE(out.find("check"), std::string::npos);
}

TEST(Cli, OutFile) {
    CliOptions o;
    o.command = "threshold";
    o.poly = "X^2 - t";
    o.alpha = "1";
    o.out = ::testing::TempDir() + "thr.txt";
    std::string out, err;
    ASSERT_EQ(run(o, out, err), 0) << err;
    EXPECT_TRUE(out.empty());
    std::ifstream in(*o.out);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("4"), std::string::npos);
}
