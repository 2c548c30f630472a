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

#include "dofkit/scenario.hpp"

#include <gtest/gtest.h>

#include "dofkit/error.hpp"
#include "test_support.hpp"

namespace dofkit {
namespace {

using testing::Matrix;
using testing::R;

TEST(ScenarioTest, ParsesAlpha) {
  const auto s = ParseScenarioText(R"({"users": 2, "subchannels": 2,
      "alpha": [["1", "0.25"], [0, "3/4"]], "snr_db": "10:10:40", "trials": 300})");
  ASSERT_TRUE(s.quality.has_value());
  EXPECT_EQ(*s.quality, Matrix({{"1", "1/4"}, {"0", "3/4"}}));
  EXPECT_EQ(*s.sim.snr_db, (std::vector<double>{10, 20, 30, 40}));
  EXPECT_EQ(*s.sim.trials, 300u);
  EXPECT_FALSE(s.sim.seed.has_value());
}

TEST(ScenarioTest, ParsesStates) {
  const auto s = ParseScenarioText(R"({"states": {"PN": "1/2", "NP": "1/2"}})");
  ASSERT_TRUE(s.states.has_value());
  EXPECT_EQ(s.states->probability("PN"), R("1/2"));
  EXPECT_EQ(s.states->probability("PP"), 0);
}

TEST(ScenarioTest, EmptyAlpha) {
  try {
    ParseScenarioText(R"({"alpha": []})");
    FAIL();
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.field(), "alpha");
    EXPECT_NE(std::string(e.what()).find("users must be ≥ 1"), std::string::npos);
  }
}

TEST(ScenarioTest, FieldDiagnostics) {
  auto field_of = [](const char* text) {
    try {
      ParseScenarioText(text);
    } catch (const ScenarioError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of(R"({"alpha": [["1", "x"]]})"), "alpha[0][1]");
  EXPECT_EQ(field_of(R"({"alpha": [["1"]], "users": 2})"), "users");
  EXPECT_EQ(field_of(R"({"alpha": [["1"]], "subchannels": 3})"), "subchannels");
  EXPECT_EQ(field_of(R"({"alpha": [["1", "1"], ["0"]]})"), "alpha");
  EXPECT_EQ(field_of(R"({"alpha": [["2"]]})"), "alpha");
  EXPECT_EQ(field_of(R"({})"), "");
  EXPECT_EQ(field_of(R"({"alpha": [["1"]], "states": {"P": "1"}})"), "");
  EXPECT_EQ(field_of(R"({"states": {"PN": "1/2"}})"), "states");
  EXPECT_EQ(field_of(R"({"alpha": [["1"]], "trials": -1})"), "trials");
}

TEST(ScenarioTest, SyntaxErrorLocation) {
  try {
    ParseScenarioText("{\n  \"alpha\": [[\"1\"]],\n  oops\n}");
    FAIL();
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GE(e.column(), 3u);
  }
}

TEST(ScenarioTest, SnrList) {
  EXPECT_EQ(ParseSnrList("30:5:45"), (std::vector<double>{30, 35, 40, 45}));
  EXPECT_EQ(ParseSnrList("0,12.5,25"), (std::vector<double>{0, 12.5, 25}));
  EXPECT_THROW(ParseSnrList("10:0:20"), Error);
  EXPECT_THROW(ParseSnrList("a,b"), Error);
}

TEST(ScenarioTest, MatrixJsonRoundTrip) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const auto q = testing::RandomMatrix(rng, testing::RandomIn(rng, 1, 5),
                                         testing::RandomIn(rng, 1, 5));
    const auto j = ToJson(q);
    EXPECT_EQ(QualityMatrixFromJson(j), q);
    EXPECT_EQ(QualityMatrixFromJson(nlohmann::json::parse(j.dump())), q);
  }
}

TEST(ScenarioTest, FractionStrings) {
  const RationalVector v = {R("3/4"), R("1"), R("0")};
  EXPECT_EQ(ToJson(v).dump(), R"(["3/4","1","0"])");
}

}  // namespace
}  // namespace dofkit
