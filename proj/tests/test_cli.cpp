#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "segre/cli.hpp"

using namespace segre;

namespace {

std::string path(const std::string& name) { return std::string(SEGRE_DATA_DIR) + "/" + name; }

CommandOptions options(const std::string& cmd, std::vector<std::string> names, bool json = false) {
  CommandOptions o;
  o.command = cmd;
  o.names = std::move(names);
  o.config.seed = 2024;
  o.json = json;
  return o;
}

std::string temp_file(const std::string& text) {
  const std::string p = ::testing::TempDir() + "segre_cli_input.txt";
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, SegreJsonOnTwistedCubic) {
  const CommandOutput out = run_file(options("segre", {"X", "Y"}, true), path("twisted_cubic.txt"));
  ASSERT_EQ(out.exit_code, 0) << out.err;
  const auto j = nlohmann::json::parse(out.out);
  EXPECT_EQ(j["seed"], 2024);
  EXPECT_EQ(j["result"]["terms"].size(), 1U);
  EXPECT_EQ(j["result"]["terms"][0]["exp"], nlohmann::json::array({2}));
  EXPECT_EQ(j["result"]["terms"][0]["coeff"], 6);
}

TEST(Cli, PlainOutputsEchoSeed) {
  const CommandOutput dim = run_file(options("dim", {"X"}), path("twisted_cubic.txt"));
  EXPECT_EQ(dim.out, "# seed=2024 prime=2147483647\ndim X = 1\n");
  const CommandOutput mult = run_file(options("mult", {"X", "Y"}), path("p6_minor_surface.txt"));
  EXPECT_NE(mult.out.find("e(X,Y) = 2"), std::string::npos);
  const CommandOutput cls = run_file(options("class", {"X"}), path("twisted_cubic.txt"));
  EXPECT_NE(cls.out.find("[X] = 3*h^2"), std::string::npos);
}

TEST(Cli, VerdictJsonShape) {
  const CommandOutput out = run_file(options("sing-contains", {"X", "Y"}, true), path("p6_minor_surface.txt"));
  ASSERT_EQ(out.exit_code, 0) << out.err;
  const auto j = nlohmann::json::parse(out.out);
  EXPECT_EQ(j["answer"], "yes");
  EXPECT_EQ(j["witness"]["g"], 58);
  EXPECT_TRUE(j.contains("seed"));
}

TEST(Cli, ProjdegAndIntersect) {
  CommandOptions o = options("projdeg", {"X", "Y"});
  const CommandOutput pd = run_file(o, path("p2_nodal_cubic.txt"));
  EXPECT_NE(pd.out.find("G = 7*h^2 + 3*h"), std::string::npos) << pd.out;
  EXPECT_NE(pd.out.find("Lambda = 2*h^2"), std::string::npos);
  const CommandOutput lk = run_file(options("intersect", {"L", "K", "Q"}), path("quadric_lines.txt"));
  EXPECT_NE(lk.out.find("L ._Q K = h^3"), std::string::npos) << lk.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_file(options("dim", {"Nope"}), path("twisted_cubic.txt")).exit_code, kExitPrecondition);
  EXPECT_EQ(run_file(options("bogus", {"X"}), path("twisted_cubic.txt")).exit_code, kExitParse);
  EXPECT_EQ(run_file(options("segre", {"X"}), path("twisted_cubic.txt")).exit_code, kExitParse);
  const CommandOutput bad = run_file(options("dim", {"I"}), temp_file("ambient P2\nvars x[0..2]\nideal I = 3x0\n"));
  EXPECT_EQ(bad.exit_code, kExitParse);
  EXPECT_NE(bad.err.find("3:12"), std::string::npos) << bad.err;
  EXPECT_NE(bad.err.find("seed=2024"), std::string::npos);
  // segre_class on a reducible Y names the violated assertion.
  const CommandOutput pre =
      run_file(options("segre", {"X", "Y"}), temp_file("ambient P2\nvars x[0..2]\nideal X = x0, x1\nideal Y = x0*x1\n"));
  EXPECT_EQ(pre.exit_code, kExitPrecondition);
  EXPECT_NE(pre.err.find("irreducible"), std::string::npos);
  // A "No" verdict is still a successful computation.
  EXPECT_EQ(run_file(options("empty", {"L"}), path("quadric_lines.txt")).exit_code, kExitOk);
}

TEST(Cli, ByteIdenticalRerunsAndPrimeAgreement) {
  const CommandOptions o = options("projdeg", {"X", "Y"}, true);
  const std::string a = run_file(o, path("p2p3_divisor.txt")).out;
  EXPECT_EQ(run_file(o, path("p2p3_divisor.txt")).out, a);
  CommandOptions other = o;
  other.config.prime = kSecondPrime;
  auto ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(run_file(other, path("p2p3_divisor.txt")).out);
  EXPECT_EQ(ja["result"], jb["result"]);
}
