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

#include <charconv>
#include <cmath>
#include <string>

#include "dofkit/error.hpp"

namespace dofkit {
namespace {

using nlohmann::json;

std::string Path(const std::string& base, std::size_t index) {
  return base + "[" + std::to_string(index) + "]";
}

Rational RationalField(const json& value, const std::string& field) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.dump());
  } catch (const Error& e) {
    throw ScenarioError(field, field + ": " + e.what());
  }
  throw ScenarioError(field, field + ": expected a fraction string such as \"3/4\"");
}

double DecimalField(const json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>()).get_d();
    } catch (const Error& e) {
      throw ScenarioError(field, field + ": " + e.what());
    }
  }
  throw ScenarioError(field, field + ": expected a decimal string");
}

std::uint64_t UnsignedField(const json& value, const std::string& field) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && ptr == s.data() + s.size()) return out;
  }
  throw ScenarioError(field, field + ": expected a nonnegative integer");
}

QualityMatrix ParseAlpha(const json& alpha, const std::string& field) {
  if (!alpha.is_array()) throw ScenarioError(field, field + ": expected an array of rows");
  if (alpha.empty()) throw ScenarioError(field, "users must be ≥ 1");
  std::vector<RationalVector> rows;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const auto row_field = Path(field, k);
    if (!alpha[k].is_array()) {
      throw ScenarioError(row_field, row_field + ": expected an array");
    }
    RationalVector row;
    for (std::size_t m = 0; m < alpha[k].size(); ++m) {
      row.push_back(RationalField(alpha[k][m], Path(row_field, m)));
    }
    rows.push_back(std::move(row));
  }
  try {
    return QualityMatrix(std::move(rows));
  } catch (const Error& e) {
    throw ScenarioError(field, e.what());
  }
}

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Scenario ParseScenario(const json& doc) {
  if (!doc.is_object()) throw ScenarioError("", "scenario must be a JSON object");
  const bool has_alpha = doc.contains("alpha");
  const bool has_states = doc.contains("states");
  if (has_alpha == has_states) {
    throw ScenarioError("", "scenario needs exactly one of \"alpha\" or \"states\"");
  }

  std::optional<std::size_t> users;
  if (doc.contains("users")) {
    users = UnsignedField(doc["users"], "users");
    if (*users == 0) throw ScenarioError("users", "users must be ≥ 1");
  }

  Scenario out;
  if (doc.contains("subchannels")) {
    out.subchannels = UnsignedField(doc["subchannels"], "subchannels");
    if (*out.subchannels == 0) {
      throw ScenarioError("subchannels", "subchannels must be ≥ 1");
    }
  }

  if (has_alpha) {
    out.quality = ParseAlpha(doc["alpha"], "alpha");
    if (users && *users != out.quality->num_users()) {
      throw ScenarioError("users", "users = " + std::to_string(*users) + " but alpha has " +
                                       std::to_string(out.quality->num_users()) + " rows");
    }
    if (out.subchannels && *out.subchannels != out.quality->num_subchannels()) {
      throw ScenarioError("subchannels",
                          "subchannels = " + std::to_string(*out.subchannels) +
                              " but alpha rows have " +
                              std::to_string(out.quality->num_subchannels()) + " entries");
    }
  } else {
    const json& states = doc["states"];
    if (!states.is_object() || states.empty()) {
      throw ScenarioError("states", "states: expected a nonempty object of label: probability");
    }
    std::map<std::string, Rational> table;
    for (const auto& [label, prob] : states.items()) {
      table[label] = RationalField(prob, "states." + label);
    }
    const std::size_t k = users.value_or(table.begin()->first.size());
    if (k == 0) throw ScenarioError("users", "users must be ≥ 1");
    try {
      out.states.emplace(k, std::move(table));
    } catch (const Error& e) {
      throw ScenarioError("states", e.what());
    }
  }

  if (doc.contains("snr_db")) {
    const json& snr = doc["snr_db"];
    if (snr.is_string()) {
      try {
        out.sim.snr_db = ParseSnrList(snr.get<std::string>());
      } catch (const Error& e) {
        throw ScenarioError("snr_db", std::string("snr_db: ") + e.what());
      }
    } else if (snr.is_array()) {
      std::vector<double> grid;
      for (std::size_t i = 0; i < snr.size(); ++i) {
        grid.push_back(DecimalField(snr[i], Path("snr_db", i)));
      }
      out.sim.snr_db = std::move(grid);
    } else {
      throw ScenarioError("snr_db", "snr_db: expected an array or \"start:step:stop\"");
    }
  }
  if (doc.contains("trials")) out.sim.trials = UnsignedField(doc["trials"], "trials");
  if (doc.contains("seed")) out.sim.seed = UnsignedField(doc["seed"], "seed");
  if (doc.contains("truncation_radius")) {
    out.sim.truncation_radius = DecimalField(doc["truncation_radius"], "truncation_radius");
  }
  return out;
}

Scenario ParseScenarioText(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = LineColumn(text, e.byte);
    throw ScenarioError("", "JSON syntax error at line " + std::to_string(line) +
                                ", column " + std::to_string(column),
                        line, column);
  }
  return ParseScenario(doc);
}

std::vector<double> ParseSnrList(std::string_view text) {
  std::vector<std::string> parts;
  const char sep = text.find(':') != std::string_view::npos ? ':' : ',';
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  std::vector<double> out;
  if (sep == ',') {
    for (const auto& p : parts) out.push_back(ParseRational(p).get_d());
    return out;
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "SNR range must be start:step:stop");
  }
  // Exact arithmetic keeps the grid free of accumulated rounding.
  const Rational begin = ParseRational(parts[0]);
  const Rational step = ParseRational(parts[1]);
  const Rational stop = ParseRational(parts[2]);
  if (step <= 0 || stop < begin) {
    throw Error(ErrorCode::kInvalidArgument, "SNR range needs step > 0 and stop >= start");
  }
  for (Rational v = begin; v <= stop; v += step) out.push_back(v.get_d());
  return out;
}

json ToJson(std::span<const Rational> values) { return json(ToStrings(values)); }

json ToJson(const QualityMatrix& q) {
  json rows = json::array();
  for (std::size_t k = 0; k < q.num_users(); ++k) rows.push_back(ToJson(q.row(k)));
  return rows;
}

QualityMatrix QualityMatrixFromJson(const json& rows) { return ParseAlpha(rows, "alpha"); }

json ToJson(const Polytope& p) {
  json h = json::array();
  for (const auto& hs : p.halfspaces()) {
    auto row = ToStrings(hs.normal);
    row.push_back(ToString(hs.rhs));
    h.push_back(std::move(row));
  }
  json v = json::array();
  if (p.vertices()) {
    for (const auto& vert : *p.vertices()) v.push_back(ToJson(vert));
  }
  return {{"h", std::move(h)}, {"v", std::move(v)}};
}

json ToJson(const SumDofReport& report, const AverageQualities& averages,
            const TotalOrderCertificate& order) {
  json permutation = nullptr;
  if (order.permutation) {
    permutation = json::array();
    for (auto user : *order.permutation) permutation.push_back(user + 1);
  }
  std::string status = "not certified";
  if (report.totally_ordered) {
    status = "separable (total order)";
  } else if (report.separable) {
    status = "separable (bounds coincide)";
  }
  return {
      {"users", averages.num_users()},
      {"subchannels", report.per_subchannel.size()},
      {"averages", ToJson(averages.values)},
      {"upperbound", ToString(report.upperbound)},
      {"achievable_separate", ToString(report.achievable_separate)},
      {"bracket", {ToString(report.achievable_separate), ToString(report.upperbound)}},
      {"per_subchannel", ToJson(report.per_subchannel)},
      {"totally_ordered", report.totally_ordered},
      {"permutation", std::move(permutation)},
      {"separable", report.separable},
      {"status", status},
  };
}

json ToJson(const RegionReport& report) {
  return {
      {"outer", ToJson(report.outer)},
      {"inner", ToJson(report.inner)},
      {"equal", report.equal},
      {"inner_max_sum", ToString(report.inner_max_sum)},
      {"outer_max_sum", ToString(report.outer_max_sum)},
  };
}

json ToJson(const PnDecomposition& decomposition) {
  json rank = json::array();
  for (auto user : decomposition.user_rank) rank.push_back(user + 1);
  return {{"weights", ToJson(decomposition.weights)}, {"user_rank", std::move(rank)}};
}

json ToJson(const SimReport& report) {
  return {
      {"snr_db", report.snr_db},
      {"sum_rate", report.sum_rate},
      {"std_err", report.std_error},
      {"slope", report.fit.slope},
      {"slope_std_err", report.fit.std_error},
      {"slope_points", report.fit.points_used},
      {"target", ToString(report.target)},
      {"abs_slope_error", report.abs_slope_error},
      {"redraws", report.redraws},
  };
}

}  // namespace dofkit
