// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the dofkit binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dofkit/scenario.hpp"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(DOFKIT_CLI) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Scenario(const char* name) {
  return std::string(DOFKIT_SCENARIOS) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, AnalyzeStaircaseTable) {
  const auto r = RunCli("analyze --input " + Scenario("staircase.json"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("upperbound      7/4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("achievable      7/4"), std::string::npos);
  EXPECT_NE(r.out.find("averages        3/4 1/2 1/4"), std::string::npos);
  EXPECT_NE(r.out.find("ordered         true"), std::string::npos);
}

TEST(CliTest, AnalyzeCyclicJson) {
  const auto r = RunCli("analyze --format json --input " + Scenario("cyclic.json"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bracket"], nlohmann::json({"1", "5/3"}));
  EXPECT_EQ(j["totally_ordered"], false);
  EXPECT_EQ(j["upperbound"], "5/3");
}

TEST(CliTest, EmptyAlphaIsParseError) {
  const auto r = RunCli("analyze --input " + Scenario("empty_alpha.json"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("users must be ≥ 1"), std::string::npos) << r.out;
}

TEST(CliTest, SyntaxErrorReportsLine) {
  const auto path = WriteTemp("dofkit_cli_bad.json", "{\n  \"alpha\": [[\"1\"]\n}\n");
  const auto r = RunCli("analyze --input " + path);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(CliTest, UnknownFlagIsParseError) {
  EXPECT_EQ(RunCli("analyze --bogus").exit_code, 2);
  EXPECT_EQ(RunCli("").exit_code, 2);
}

TEST(CliTest, RegionUniformIsEqual) {
  const auto r = RunCli("region --format json --input " + Scenario("uniform_k3_m2.json"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["equal"], true);
  EXPECT_EQ(j["inner_max_sum"], j["outer_max_sum"]);
}

TEST(CliTest, RegionCsvListsVertices) {
  const auto r = RunCli("region --format csv --input " + Scenario("cyclic.json"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("region,d1,d2,d3\n", 0), 0u);
  EXPECT_NE(r.out.find("outer,0,0,0\n"), std::string::npos);
  EXPECT_NE(r.out.find("inner,1,0,0\n"), std::string::npos);
}

TEST(CliTest, RegionTooManyUsersIsDomainError) {
  const auto path = WriteTemp("dofkit_cli_k7.json",
                              R"({"alpha": [["0"],["0"],["0"],["0"],["0"],["0"],["0"]]})");
  EXPECT_EQ(RunCli("region --input " + path).exit_code, 3);
}

TEST(CliTest, PnOnStaircaseAverages) {
  const auto r = RunCli("pn --format json --input " + Scenario("staircase_averages.json"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weights"], nlohmann::json({"1/4", "1/4", "1/4", "1/4"}));
  EXPECT_EQ(j["weighted_sum"], "7/4");
  const auto pattern = dofkit::QualityMatrixFromJson(j["pattern"]);
  EXPECT_EQ(pattern.num_users(), 3u);
  EXPECT_EQ(pattern.num_subchannels(), 4u);
}

TEST(CliTest, PnNonRealizableWidth) {
  const auto r = RunCli("pn --subchannels 3 --input " + Scenario("staircase_averages.json"));
  EXPECT_EQ(r.exit_code, 4) << r.out;
}

TEST(CliTest, AlternatingMatchesMarginals) {
  const auto r = RunCli("alternating --format json --input " + Scenario("alternating_pn_np.json"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["subchannels"], 2);
  EXPECT_EQ(j["marginals"], nlohmann::json({"1/2", "1/2"}));
  // NP sorts before PN.
  EXPECT_EQ(j["alpha"].dump(), R"([["0","1"],["1","0"]])");
}

TEST(CliTest, SimulateZeroTrials) {
  EXPECT_EQ(RunCli("simulate --trials 0 --input " + Scenario("two_user.json")).exit_code, 2);
}

TEST(CliTest, SimulateCsvIsDeterministic) {
  const std::string args = "simulate --format csv --trials 100 --snr 10:10:40 --seed 5 --input " +
                           Scenario("two_user.json");
  const auto a = RunCli(args + " --threads 1");
  const auto b = RunCli(args + " --threads 4");
  ASSERT_EQ(a.exit_code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("snr_db,sum_rate,std_err\n", 0), 0u);
}

TEST(CliTest, OutFileMatchesStdout) {
  const auto path = (std::filesystem::temp_directory_path() / "dofkit_cli_out.json").string();
  const std::string args = "analyze --format json --input " + Scenario("staircase.json");
  const auto direct = RunCli(args);
  ASSERT_EQ(RunCli(args + " --out " + path).exit_code, 0);
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(written, direct.out);
}

}  // namespace
