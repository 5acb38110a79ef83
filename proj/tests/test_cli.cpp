#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = bigfree::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

void expect_output(std::vector<std::string> args, const std::string& expected) {
  const Result r = run(args);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, expected + "\n");
}

}  // namespace

TEST(Cli, WordCommands) {
  expect_output({"reduce", "a1 a1^-1 a2"}, "a2");
  expect_output({"mul", "a1 a2", "a2^-1 a1"}, "a1 a1");
  expect_output({"inv", "a1 a2^-1"}, "a2 a1^-1");
  expect_output({"len", "a1 a2 a1^-1"}, "[2,1]");
  expect_output({"dist", "a1 a2", "a1 a3"}, "[0,1,1]");
  expect_output({"gromov", "a1 a2", "a1 a3"}, "[1]");
  expect_output({"prefix", "a1 a2", "a1 a3"}, "a1");
  expect_output({"subwords", "a2 a1"}, "\t[]\na2\t[0,1]\na2 a1\t[1,1]");
  expect_output({"reduce", "a1 a1^-1"}, "");
}

TEST(Cli, CancelVerify) {
  expect_output({"cancel-verify", "a1 a1^-1 a2 a2^-1", "1-2,3-4"}, "valid; leaves ''");
  expect_output({"cancel-verify", "a1 a2 a1^-1 a2^-1", "1-3,2-4"},
                "invalid: noncrossing fails at t=1, t*=3: ([1,3]_T)* = {3,4,1} != {1,2,3}");
  EXPECT_EQ(run({"cancel-verify", "a1", "1-2"}).status, 1);
}

TEST(Cli, TreeAndTriples) {
  expect_output({"tree-dist", "[1,1] @ a1 a2", "[1,0,1] @ a1 a3"}, "[0,1,1]");
  expect_output({"tree-act", "a1", "[1] @ a1^-1 a2"}, "[] @ a1");
  expect_output({"y", "", "a1 a2", "a1 a3"}, "a1");
  expect_output({"to-triple", "[1] @ a2 a1"}, "(a2 ; a1^1 ; [1,-1])");
  expect_output({"from-triple", "(a2 ; a1 ; [1,-1])"}, "[1] @ a2 a1");
  expect_output({"triple-act", "a1", "( ; a1^-1 ; [0,1])"}, "( ; a1^1 ; [1,-1])");
  expect_output({"triple-dist", "( ; a1 ; [0,1])", "(a1 ; a2 ; [0,0,1])"},
                "[1,-1,1] (simplified formula gives [1,1,1], nested)");
  expect_output({"project", "( ; a1^-1 ; [0,1])"}, "C(a1) @ [1,-1]");
  expect_output({"circle-dist", "C(a1) @ [1,-1]", "C(*) @ []"}, "[0,1]");
  expect_output({"axioms-check"}, "pass (53 words)");
}

TEST(Cli, CayleyAndTopology) {
  expect_output({"cayley-dist", "( ; a1 ; 1/2)", ""}, "[1/2]");
  expect_output({"cayley-act", "a1", "( ; a1^-1 ; 1/3)"}, "( ; a1^1 ; 2/3)");
  expect_output({"ball", "", "--radius", "2", "--letters", "3"}, "37 vertices, 36 edges, tree");
  expect_output({"ball-letter", "a1", "a3", "a1 a5"}, "true");
  expect_output({"ball-metric", "", "[0,1]", "a2"}, "false");
  const Result embed = run({"embed-compare", "", "a1", "--grid", "4"});
  EXPECT_EQ(embed.status, 0);
  EXPECT_NE(embed.out.find("2 coincidences"), std::string::npos);
}

TEST(Cli, BallExports) {
  const Result dot = run({"ball", "", "--radius", "1", "--letters", "1", "--dot"});
  EXPECT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("digraph ball {", 0), 0u);
  const Result json = run({"ball", "", "--radius", "1", "--letters", "2", "--json"});
  ASSERT_EQ(json.status, 0);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["vertices"].size(), 5u);
  EXPECT_EQ(j["edges"].size(), 4u);
  EXPECT_EQ(j["center"], "");
}

TEST(Cli, JsonFlagAnywhere) {
  for (auto args : {std::vector<std::string>{"--json", "dist", "a1 a2", "a1 a3"},
                    std::vector<std::string>{"dist", "a1 a2", "a1 a3", "--json"}}) {
    const Result r = run(args);
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "[0,1,1]");
  }
}

TEST(Cli, OmegaPlusOne) {
  expect_output({"--alphabet", "omega+1", "len", "b a1"}, "[1;TOP=1]");
  const Result demo = run({"demo", "omega-plus-one", "--depth", "5"});
  ASSERT_EQ(demo.status, 0) << demo.err;
  std::istringstream lines(demo.out);
  std::string line;
  std::getline(lines, line);
  for (int k = 1; k <= 5; ++k) {
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_EQ(line.rfind(std::to_string(k), 0), 0u);
    EXPECT_NE(line.find("a" + std::to_string(k) + "^1"), std::string::npos) << line;
  }
  EXPECT_FALSE(std::getline(lines, line));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"dist", "a1"}).status, 2);
  EXPECT_EQ(run({"reduce", "a1^0"}).status, 2);          // grammar
  EXPECT_EQ(run({"--alphabet", "omega+2", "len", "a1"}).status, 2);
  EXPECT_EQ(run({"prefix", "a1 a1^-1", "a1"}).status, 1);  // unreduced
  EXPECT_EQ(run({"tree-dist", "[2] @ a1", "[] @ "}).status, 1);
  EXPECT_EQ(run({"len", "b"}).status, 2);                 // b needs omega+1
  const Result usage = run({"dist", "a1"});
  EXPECT_NE(usage.err.find("Word:"), std::string::npos);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, SuiteSingleCheck) {
  const Result r = run({"suite", "--check", "C8", "--samples", "10"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("PASS C8"), std::string::npos);
  EXPECT_NE(r.out.find("1 passed, 0 failed"), std::string::npos);
  const Result again = run({"suite", "--check", "C8", "--samples", "10"});
  EXPECT_EQ(r.out, again.out);
  EXPECT_EQ(run({"suite", "--check", "C99"}).status, 1);
}
