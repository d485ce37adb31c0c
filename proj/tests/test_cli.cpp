#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json_value.hpp"

namespace {

struct result {
  int code;
  std::string out, err;
};

result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qnum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

using qnum::integer;
using qnum::json::value;

TEST(Cli, RationalAsJson) {
  const auto r = run({"rat", "5/2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const value v = qnum::json::parse(r.out);
  EXPECT_EQ(v.at("schemaVersion").as_string(), "1");
  EXPECT_EQ(v.at("command").as_string(), "rat");
  EXPECT_EQ(qnum::json::to_integers(v.at("result").at("num")), (std::vector<integer>{1, 2, 1, 1}));
  EXPECT_EQ(qnum::json::to_integers(v.at("result").at("den")), (std::vector<integer>{1, 1}));
}

TEST(Cli, AllMethodsAgree) {
  const auto r = run({"rat", "70/29", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all methods agree"), std::string::npos);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run({"rat", "5/0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"rat", "5/2", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"rat", "5/2", "--format", "dot"}).code, 2);
  EXPECT_EQ(run({"irr", "--order", "8"}).code, 2);
  EXPECT_EQ(run({"irr", "--cf", "3,7,15", "--order", "8"}).code, 2);
  EXPECT_EQ(run({"hankel", "--target", "nonsense"}).code, 2);
  EXPECT_EQ(run({"verify", "methods", "--max-den", "1000"}).code, 2);
}

TEST(Cli, FailedChecksExitOne) {
  EXPECT_EQ(run({"somos", "--target", "catalan", "--count", "10"}).code, 1);
  EXPECT_EQ(run({"somos", "--target", "golden", "--shift", "1"}).code, 0);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"rat", "13/8"}, {"irr", "--periodic", "1", "--order", "16"}, {"metallic", "2"},
        {"trace", "T3 S T2 S T2 S T S T S"}, {"hankel", "--target", "golden", "--shift", "2"}, {"farey", "--depth", "3"},
        {"vieta", "nonagon", "--order", "10", "--emit-b"}}) {
    auto full = args;
    full.insert(full.end(), {"--format", "json"});
    const auto r = run(full);
    ASSERT_EQ(r.code, 0) << args.front() << ": " << r.err;
    EXPECT_EQ(qnum::json::parse(r.out).pretty() + "\n", r.out);
    EXPECT_EQ(run(full).out, r.out);
  }
}

TEST(Cli, IrrationalFromFileAndAlgebraic) {
  const auto pi = run({"irr", "--cf-file", "pi.cf", "--terms", "60", "--order", "10", "--format", "json"});
  ASSERT_EQ(pi.code, 0) << pi.err;
  EXPECT_EQ(qnum::json::to_integers(qnum::json::parse(pi.out).at("result").at("coeffs")),
            (std::vector<integer>{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
  const auto phi = run({"irr", "--algebraic", "x^2-x-1", "--interval", "1,2", "--order", "16"});
  EXPECT_EQ(phi.out, run({"irr", "--periodic", "1", "--order", "16"}).out);
}

TEST(Cli, FareyDot) {
  const auto r = run({"farey", "--depth", "2", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("\"1/2\" -> \"2/3\" [label=\"q^2\"]"), std::string::npos);
}

TEST(Cli, Latex) {
  const auto r = run({"left", "1/2", "--format", "latex"});
  EXPECT_EQ(r.out, "\\left[\\frac{1}{2}\\right]_q^{\\flat} = \\frac{q^{2}}{1 + q^{2}}\n");
}

TEST(Cli, VerifyAll) {
  const auto r = run({"--max-den", "40", "verify", "all"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Json, BigIntegersSurvive) {
  const std::string text = R"({"n":123456789012345678901234567890,"m":-98765432109876543210,"x":1.5})";
  const value v = qnum::json::parse(text);
  EXPECT_EQ(v.at("n").as_integer(), integer("123456789012345678901234567890"));
  EXPECT_EQ(v.at("m").as_integer(), integer("-98765432109876543210"));
  EXPECT_TRUE(v.at("x").is_double());
  EXPECT_EQ(v.dump(), text);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(qnum::json::parse("{\"a\":"), qnum::error);
  EXPECT_THROW(qnum::json::parse("[1,2"), qnum::error);
}

}  // namespace
