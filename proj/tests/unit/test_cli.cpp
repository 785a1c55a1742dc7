#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = hiero::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TabletFromBuiltin) {
  const Outcome o = run({"tablet", "--builtin", "ex1.2"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("tablet size: 6\n"), std::string::npos);
  EXPECT_NE(o.out.find("degree: 6\n"), std::string::npos);
  EXPECT_NE(o.out.find("++.  ++.  ++.  +..  +..  ...\n"), std::string::npos);
}

TEST(Cli, TabletFromStdinAsJson) {
  const Outcome o = run({"tablet", "-", "--format", "json"}, "ring x@0,1,1 y@0,1,2; order lex x, y; gens x*y;");
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["tablet_size"], 2);
  EXPECT_EQ(j["degree"], 2);
}

TEST(Cli, OrderOverride) {
  const Outcome o = run({"init", "--builtin", "ex2.6", "--order", "lex x2, x1"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(run({"init", "--builtin", "ex2.6", "--order", "lex x2"}).code, 2);
  EXPECT_EQ(run({"init", "--builtin", "ex2.6", "--order", "lex x2, zz"}).code, 2);
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"groebner", "--builtin", "ex1.3"}).code, 0);
  EXPECT_EQ(run({"polarize", "--builtin", "ex1.3"}).out.substr(0, 15), "new variables: ");
  EXPECT_NE(run({"decompose", "--builtin", "ex1.3"}).out.find("components: 5\n"), std::string::npos);
  for (const char* algo : {"taylor", "split", "faces"}) {
    const Outcome o = run({"kpoly", "--builtin", "ex1.3", "--algo", algo});
    EXPECT_EQ(o.code, 0) << o.err;
    EXPECT_NE(o.out.find("K: 1 - 6*t^2 + 8*t^3 - 3*t^4\n"), std::string::npos) << algo << o.out;
    EXPECT_NE(o.out.find("degree: 4\n"), std::string::npos);
  }
  EXPECT_NE(run({"schubert", "2143", "--rows", "4321"}).out.find("tablet size: 3"), std::string::npos);
  EXPECT_NE(run({"schubert", "214365", "--antidiagonal"}).out.find("tablet size: 15"), std::string::npos);
  EXPECT_EQ(run({"schubert", "2143", "--emit"}).out.substr(0, 5), "ring ");
  EXPECT_NE(run({"commuting", "2"}).out.find("degree: 3\n"), std::string::npos);
  EXPECT_NE(run({"pipedreams", "2143"}).out.find("3 pipe dreams"), std::string::npos);
  EXPECT_NE(run({"bpds", "2143"}).out.find("3 bumpless pipe dreams"), std::string::npos);
  EXPECT_NE(run({"fixtures"}).out.find("commuting3\t"), std::string::npos);
  EXPECT_EQ(run({"fixtures", "--dump", "ex2.6"}).out.substr(0, 5), "ring ");
}

TEST(Cli, TabletWithoutGridListsPrimes) {
  const Outcome o = run({"tablet", "-"}, "ring x y z; order lex x, y, z; gens x*y, x*z;");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("<x>\n"), std::string::npos) << o.out;
}

TEST(Cli, Check) {
  const Outcome o = run({"check", "km", "--upto", "3", "--threads", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["all_pass"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"tablet"}).code, 2);
  EXPECT_EQ(run({"tablet", "/nonexistent/file.ideal"}).code, 2);
  EXPECT_EQ(run({"tablet", "--builtin", "nope"}).code, 2);
  EXPECT_EQ(run({"tablet", "--format", "svg", "--builtin", "ex1.2"}).code, 2);
  EXPECT_EQ(run({"schubert", "2243"}).code, 2);

  Outcome o = run({"tablet", "-"}, "ring x y; order lex x, y; gens x*q;");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("UndeclaredVariable"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("1:34:"), std::string::npos) << o.err;

  // computation failures exit 1
  o = run({"tablet", "-"}, "ring x y; order lex x, y; gens x - y^2;");
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("NotHomogeneous"), std::string::npos) << o.err;
  EXPECT_EQ(run({"check", "km", "--upto", "6"}).code, 1);
}
