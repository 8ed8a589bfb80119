#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gaussinv/cli.hpp"

using namespace gaussinv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, ComputeJson) {
  const auto r = run({"compute", "knot: O1+ O2+ U1+ U2+", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(R"({"wr":2,"J":2,"Q":2,"writhe_poly":{"modulus":0,"terms":[[0,1],[2,1]]},)", 0), 0u);
}

TEST(Cli, ComputeTextLink) {
  const auto r = run({"compute", "link: O1+ / U1+"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lk = 1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("span = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("linking_poly = 0"), std::string::npos);
}

TEST(Cli, ComputeRejectsBadDiagram) {
  const auto r = run({"compute", "knot: O1+ O1+"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "InvalidDiagram: id 1 has two O tokens\n");
  EXPECT_EQ(run({"compute", "knot O1+"}).code, 1);
}

TEST(Cli, ComputeFromStdin) {
  const auto r = run({"compute", "--invariants", "wr,Q", "--json"}, "# a comment\n\nknot: O1+ O2+ U1+ U2+\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"wr\":2,\"Q\":2}\n");
  EXPECT_EQ(run({"compute"}, "").code, 1);
  EXPECT_EQ(run({"compute", "--invariants", "nope", "knot:"}).code, 1);
}

TEST(Cli, ComputeBatchFile) {
  const auto path = temp_file("batch.txt", "knot: O1+ O2+ U1+ U2+\n# skip\n\nlink: O1+ U2+ / U1+ O2+  # hopf\n");
  const auto r = run({"compute", "--file", path, "--json"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["lk"], 1);
  EXPECT_EQ(run({"compute", "--file", "/nonexistent/x"}).code, 1);
  EXPECT_EQ(run({"compute", "knot:", "--file", path}).code, 1);
}

TEST(Cli, Transform) {
  EXPECT_EQ(run({"transform", "mirror", "knot: O1+ O2+ U1+ U2+"}).out, "knot: O1- O2- U1- U2-\n");
  EXPECT_EQ(run({"transform", "closure", "long: O1+ U1+"}).out, "knot: O1+ U1+\n");
  EXPECT_EQ(run({"transform", "descending", "flatlong: O1+ O2+ U1+ U2+"}).out, "long: O1+ O2+ U1+ U2+\n");
  EXPECT_EQ(run({"transform", "inverse", "knot: O1+ O2+ U1+ U2+"}).out, "knot: O1+ O2+ U1+ U2+\n");
  EXPECT_EQ(run({"transform", "resolve", "flatlong: O1+ O2+ U1+ U2+", "--flip", "1"}).out, "long: U1- O2+ O1- U2+\n");
  EXPECT_EQ(run({"transform", "connect", "flatlong: O1+ O2+ U1+ U2+", "flatlong: O1+ U1+"}).out,
            "flatlong: O1+ O2+ U1+ U2+ O3+ U3+\n");
  EXPECT_EQ(run({"transform", "connect", "knot: O1+ U1+", "knot: O1- U1-", "--cut1", "1"}).out,
            "knot: O1+ U1+ U2- O2-\n");
}

TEST(Cli, TransformErrors) {
  const auto r = run({"transform", "closure", "knot: O1+ U1+"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("KindMismatch", 0), 0u);
  EXPECT_EQ(run({"transform", "mirror", "flatlong: O1+ U1+"}).code, 1);
  EXPECT_EQ(run({"transform", "spin", "knot:"}).code, 1);
  EXPECT_EQ(run({"transform", "resolve", "flatlong: O1+ U1+", "--flip", "4"}).code, 1);
  EXPECT_EQ(run({"transform", "connect", "knot: O1+ U1+", "long: O1+ U1+"}).code, 1);
  EXPECT_EQ(run({"transform", "connect", "knot: O1+ U1+", "knot: O1+ U1+", "--cut1", "7"}).code, 1);
  EXPECT_EQ(run({"transform", "connect", "link: / ", "link: / "}).code, 1);
}

TEST(Cli, Fuzz) {
  const auto a = run({"fuzz", "--kind", "knot", "--seed", "1", "--trials", "50", "--steps", "20", "--json"});
  EXPECT_EQ(a.code, 0);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["trials"], 50);
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_EQ(run({"fuzz", "--kind", "knot", "--seed", "1", "--trials", "50", "--steps", "20", "--json"}).out, a.out);
  const auto z = run({"fuzz", "--trials", "0"});
  EXPECT_EQ(z.code, 0);
  EXPECT_NE(z.out.find("failures: 0"), std::string::npos);
  EXPECT_EQ(run({"fuzz", "--kind", "link", "--seed", "7", "--trials", "100", "--steps", "15"}).code, 0);
  EXPECT_EQ(run({"fuzz", "--kind", "flatlong", "--max-chords", "4", "--trials", "30"}).code, 0);
}

TEST(Cli, FuzzSeedFromEnvironment) {
  ::setenv("GAUSS_SEED", "5", 1);
  const auto a = run({"fuzz", "--seed", "1", "--trials", "5", "--json"});
  ::unsetenv("GAUSS_SEED");
  EXPECT_EQ(Json::parse(a.out)["seed"], 5);
  ::setenv("GAUSS_SEED", "five", 1);
  EXPECT_EQ(run({"fuzz", "--trials", "1"}).code, 1);
  ::unsetenv("GAUSS_SEED");
}

TEST(Cli, FlagErrors) {
  EXPECT_EQ(run({"fuzz", "--bogus"}).code, 1);
  EXPECT_EQ(run({"fuzz", "--kind", "torus"}).code, 1);
  EXPECT_EQ(run({"fuzz", "--trials", "-3"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"draw"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Compare) {
  const auto same = run({"compare", "knot: O1+ O2+ U1+ U2+", "knot: U2+ O1+ O2+ U1+"});
  EXPECT_EQ(same.code, 0);
  EXPECT_NE(same.out.find("all: equal"), std::string::npos);
  const auto diff = run({"compare", "knot: O1+ O2+ U1+ U2+", "knot: O1- O2- U1- U2-", "--json"});
  const Json j = Json::parse(diff.out);
  EXPECT_FALSE(j["equal"].get<bool>());
  EXPECT_FALSE(j["fields"]["writhe_poly"].get<bool>());
  EXPECT_EQ(run({"compare", "knot: O1+ U1+", "link: O1+ / U1+"}).code, 1);
  EXPECT_EQ(run({"compare", "knot: O1+ U1+"}).code, 1);
}
