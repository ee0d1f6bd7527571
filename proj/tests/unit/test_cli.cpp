#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "weyl_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result runCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = weyl::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string tempFile(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, BasisDump) {
  auto r = runCli({"basis", "--n", "3", "--kind", "su", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["generators"].size(), 8u);
  r = runCli({"basis", "--n", "2", "--kind", "u"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["generators"].size(), 4u);
  EXPECT_EQ(runCli({"basis", "--n", "1", "--kind", "su"}).code, 2);
  EXPECT_EQ(runCli({"basis", "--n", "3", "--kind", "so"}).code, 2);
  EXPECT_EQ(runCli({"basis", "--n", "2", "--format", "csv"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(runCli({}).code, 2);
  EXPECT_EQ(runCli({"verify", "bogus"}).code, 2);
  EXPECT_EQ(runCli({"verify", "trig", "--format", "xml"}).code, 2);
  EXPECT_EQ(runCli({"verify", "trig", "--h", "0.5"}).code, 2);
  EXPECT_EQ(runCli({"verify", "trig", "--tol.trig"}).code, 2);
  EXPECT_EQ(runCli({"verify", "commutators", "--n", "4"}).code, 2);
  EXPECT_EQ(runCli({"polar"}).code, 2);
  EXPECT_EQ(runCli({"--help"}).code, 0);
}

TEST(Cli, VerifyCommutators) {
  const auto r = runCli({"verify", "commutators", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_GE(j["reports"][0]["samples"].get<int>(), 30);
}

TEST(Cli, VerifyCurvatureCsv) {
  const auto r = runCli({"verify", "curvature", "--n", "3", "--samples", "50", "--seed", "7",
                         "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("curvature-constant-N3,50,"), std::string::npos);
}

TEST(Cli, VerifyLaplacianDefining) {
  const auto r = runCli({"verify", "laplacian", "--n", "2", "--rep", "defining", "--samples", "10",
                         "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_LT(nlohmann::json::parse(r.out)["reports"][0]["maxRelErr"].get<double>(), 5e-4);
}

TEST(Cli, ToleranceOverrideCanFailACheck) {
  const auto r = runCli({"verify", "trig", "--samples", "100", "--tol.trig-identity=1e-30"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reports"][0]["tolerance"].get<double>(), 1e-30);
}

TEST(Cli, DeterministicAcrossRunsAndSeedSources) {
  const auto a = runCli({"verify", "su", "--n", "2", "--samples", "3", "--seed", "11"});
  const auto b = runCli({"verify", "su", "--n", "2", "--samples", "3", "--seed", "11"});
  EXPECT_EQ(a.out, b.out);
  setenv("WEYL_LAPLACE_SEED", "11", 1);
  const auto c = runCli({"verify", "su", "--n", "2", "--samples", "3"});
  unsetenv("WEYL_LAPLACE_SEED");
  EXPECT_EQ(a.out, c.out);
  setenv("WEYL_LAPLACE_SEED", "abc", 1);
  EXPECT_EQ(runCli({"verify", "trig", "--samples", "3"}).code, 2);
  unsetenv("WEYL_LAPLACE_SEED");
}

TEST(Cli, PolarFromFileAndRandom) {
  const auto id = tempFile("weyl_id.json", R"({"dim":2,"rows":[[[1,0],[0,0]],[[0,0],[1,0]]]})");
  auto r = runCli({"polar", id});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["regular"].get<bool>());
  EXPECT_EQ(j["theta"][0].get<double>(), 0.0);

  r = runCli({"polar", "--random", "--n", "3", "--seed", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_LT(nlohmann::json::parse(r.out)["reconstructionError"].get<double>(), 1e-10);

  const auto bad = tempFile("weyl_bad.json", R"({"dim":2,"rows":[[[1,0],[1,0]],[[0,0],[1,0]]]})");
  EXPECT_EQ(runCli({"polar", bad}).code, 3);
  const auto junk = tempFile("weyl_junk.json", "not json");
  EXPECT_EQ(runCli({"polar", junk}).code, 3);
  EXPECT_EQ(runCli({"polar", "/nonexistent/file.json"}).code, 3);
}

TEST(Cli, OutputFile) {
  const auto path = (std::filesystem::temp_directory_path() / "weyl_out.json").string();
  const auto r = runCli({"verify", "trig", "--samples", "10", "--output", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_TRUE(nlohmann::json::parse(in)["pass"].get<bool>());
}

TEST(Cli, CharacterEigenvalue) {
  auto r = runCli({"character-eig", "--n", "3", "--partition", "1,0,0"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["mean"].get<double>(), -3.0, 1e-4);
  EXPECT_NEAR(j["oracle"].get<double>(), -3.0, 1e-10);

  r = runCli({"character-eig", "--n", "3", "--partition", "1,1,0"});
  EXPECT_NEAR(nlohmann::json::parse(r.out)["mean"].get<double>(), -4.0, 1e-3);

  r = runCli({"character-eig", "--n", "3", "--partition", "0,0,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["mean"].get<double>(), 0.0, 1e-12);

  EXPECT_EQ(runCli({"character-eig", "--n", "2", "--partition", "1,0,0"}).code, 2);
  EXPECT_EQ(runCli({"character-eig", "--n", "3", "--partition", "0,1,0"}).code, 3);
}

TEST(ToleranceOverrides, Extraction) {
  std::vector<std::string> args{"verify", "--tol.a", "1e-3", "--tol.b=2", "x"};
  const auto m = weyl::cli::extractToleranceOverrides(args);
  EXPECT_EQ(m.at("a"), 1e-3);
  EXPECT_EQ(m.at("b"), 2.0);
  EXPECT_EQ(args, (std::vector<std::string>{"verify", "x"}));
  std::vector<std::string> bad{"--tol.a=-1"};
  EXPECT_THROW(weyl::cli::extractToleranceOverrides(bad), std::invalid_argument);
}
