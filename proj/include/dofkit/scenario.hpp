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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dofkit/csit_model.hpp"
#include "dofkit/dof_bounds.hpp"
#include "dofkit/dof_region.hpp"
#include "dofkit/link_sim.hpp"

namespace dofkit {

// Malformed scenario input. `field` is a JSON path such as "alpha[1][2]";
// `line`/`column` are set for syntax errors.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& what, std::size_t line = 0,
                std::size_t column = 0)
      : std::runtime_error(what), field_(std::move(field)), line_(line), column_(column) {}

  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

struct SimParameters {
  std::optional<std::vector<double>> snr_db;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> truncation_radius;
};

// Exactly one of `quality` / `states` is set.
struct Scenario {
  std::optional<QualityMatrix> quality;
  std::optional<JointStateSpec> states;
  std::optional<std::size_t> subchannels;
  SimParameters sim;
};

Scenario ParseScenario(const nlohmann::json& doc);

// Parses JSON text; syntax errors carry line and column.
Scenario ParseScenarioText(std::string_view text);

// Decimal SNR list: "30,35,40" or a range "30:5:60" (start:step:stop).
std::vector<double> ParseSnrList(std::string_view text);

nlohmann::json ToJson(std::span<const Rational> values);
nlohmann::json ToJson(const QualityMatrix& q);
nlohmann::json ToJson(const Polytope& p);
nlohmann::json ToJson(const SumDofReport& report, const AverageQualities& averages,
                      const TotalOrderCertificate& order);
nlohmann::json ToJson(const RegionReport& report);
nlohmann::json ToJson(const PnDecomposition& decomposition);
nlohmann::json ToJson(const SimReport& report);

// Inverse of ToJson(QualityMatrix).
QualityMatrix QualityMatrixFromJson(const nlohmann::json& rows);

}  // namespace dofkit
