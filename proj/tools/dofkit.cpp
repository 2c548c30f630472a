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

// Command-line front end. Exit codes: 0 ok, 2 parse or validation error,
// 3 domain error, 4 subchannel count cannot realize the requested spec.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dofkit/csit_model.hpp"
#include "dofkit/dof_bounds.hpp"
#include "dofkit/dof_region.hpp"
#include "dofkit/error.hpp"
#include "dofkit/link_sim.hpp"
#include "dofkit/scenario.hpp"
#include "json.hpp"

namespace {

using dofkit::Error;
using dofkit::ErrorCode;
using dofkit::Rational;
using dofkit::Scenario;
using dofkit::ScenarioError;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonRealizable = 4;

struct Options {
  std::string input;
  std::string format = "table";
  std::string out;
  std::string snr;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> subchannels;
  std::size_t threads = 1;
};

using Rows = std::vector<std::pair<std::string, std::string>>;

std::string Join(const std::vector<std::string>& items, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string JoinRationals(std::span<const Rational> values, const char* sep = " ") {
  return Join(dofkit::ToStrings(values), sep);
}

std::string Decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string RenderTable(const Rows& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  }
  return out;
}

std::string RenderCsv(const Rows& rows) {
  std::string out = "quantity,value\n";
  for (const auto& [k, v] : rows) out += k + "," + v + "\n";
  return out;
}

std::string RenderMatrix(const dofkit::QualityMatrix& q) {
  std::string out;
  for (std::size_t k = 0; k < q.num_users(); ++k) {
    out += "  " + JoinRationals(q.row(k)) + "\n";
  }
  return out;
}

std::string MatrixCsv(const dofkit::QualityMatrix& q) {
  std::string out;
  for (std::size_t k = 0; k < q.num_users(); ++k) out += JoinRationals(q.row(k), ",") + "\n";
  return out;
}

Scenario LoadScenario(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ScenarioError("--input", "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return dofkit::ParseScenarioText(text);
}

const dofkit::QualityMatrix& RequireQuality(const Scenario& s) {
  if (!s.quality) throw ScenarioError("alpha", "this command needs an \"alpha\" matrix");
  return *s.quality;
}

std::string Analyze(const Scenario& s, const Options& opt) {
  const auto& q = RequireQuality(s);
  const auto averages = dofkit::ComputeAverageQualities(q);
  const auto order = dofkit::CheckTotalOrder(q);
  const auto report = dofkit::SeparabilityReport(q);
  if (opt.format == "json") return dofkit::ToJson(report, averages, order).dump(2) + "\n";

  const json j = dofkit::ToJson(report, averages, order);
  std::string perm = "-";
  if (order.permutation) {
    std::vector<std::string> labels;
    for (auto u : *order.permutation) labels.push_back(std::to_string(u + 1));
    perm = Join(labels);
  }
  const Rows rows = {
      {"users", std::to_string(q.num_users())},
      {"subchannels", std::to_string(q.num_subchannels())},
      {"averages", JoinRationals(averages.values)},
      {"upperbound", dofkit::ToString(report.upperbound)},
      {"achievable", dofkit::ToString(report.achievable_separate)},
      {"bracket", "[" + dofkit::ToString(report.achievable_separate) + ", " +
                      dofkit::ToString(report.upperbound) + "]"},
      {"per_subchannel", JoinRationals(report.per_subchannel)},
      {"ordered", report.totally_ordered ? "true" : "false"},
      {"permutation", perm},
      {"separable", report.separable ? "true" : "false"},
      {"status", j["status"].get<std::string>()},
  };
  return opt.format == "csv" ? RenderCsv(rows) : RenderTable(rows);
}

std::string RenderPolytope(const dofkit::Polytope& p) {
  std::string out;
  for (const auto& h : p.halfspaces()) {
    std::string lhs;
    for (std::size_t k = 0; k < h.normal.size(); ++k) {
      if (h.normal[k] == 0) continue;
      const Rational c = h.normal[k];
      std::string term = "d" + std::to_string(k + 1);
      if (abs(c) != 1) term = dofkit::ToString(abs(c)) + "*" + term;
      if (lhs.empty()) {
        lhs = (c < 0 ? "-" : "") + term;
      } else {
        lhs += (c < 0 ? " - " : " + ") + term;
      }
    }
    out += "  " + lhs + " <= " + dofkit::ToString(h.rhs) + "\n";
  }
  out += "  vertices:\n";
  if (p.vertices()) {
    for (const auto& v : *p.vertices()) out += "    (" + JoinRationals(v, ", ") + ")\n";
  }
  return out;
}

std::string Region(const Scenario& s, const Options& opt) {
  const auto report = dofkit::ComputeRegionReport(RequireQuality(s));
  if (opt.format == "json") return dofkit::ToJson(report).dump(2) + "\n";
  if (opt.format == "csv") {
    std::vector<std::string> header = {"region"};
    for (std::size_t k = 0; k < report.outer.dimension(); ++k) {
      header.push_back("d" + std::to_string(k + 1));
    }
    std::string out = Join(header, ",") + "\n";
    for (const auto& [name, p] : {std::pair{"outer", &report.outer}, std::pair{"inner", &report.inner}}) {
      for (const auto& v : *p->vertices()) out += std::string(name) + "," + JoinRationals(v, ",") + "\n";
    }
    return out;
  }
  std::string out = "outer region:\n" + RenderPolytope(report.outer);
  out += "inner region:\n" + RenderPolytope(report.inner);
  out += RenderTable({{"equal", report.equal ? "true" : "false"},
                      {"inner_max_sum", dofkit::ToString(report.inner_max_sum)},
                      {"outer_max_sum", dofkit::ToString(report.outer_max_sum)}});
  return out;
}

std::string Pn(const Scenario& s, const Options& opt) {
  const auto averages = dofkit::ComputeAverageQualities(RequireQuality(s));
  const auto decomposition = dofkit::DecomposePn(averages);
  const auto pattern = dofkit::ConstructPnPattern(averages, opt.subchannels);
  const Rational total = dofkit::PnWeightedSum(decomposition);
  if (opt.format == "json") {
    json j = dofkit::ToJson(decomposition);
    j["averages"] = dofkit::ToJson(averages.values);
    j["weighted_sum"] = dofkit::ToString(total);
    j["pattern"] = dofkit::ToJson(pattern);
    return j.dump(2) + "\n";
  }
  if (opt.format == "csv") return MatrixCsv(pattern);
  std::vector<std::string> rank;
  for (auto u : decomposition.user_rank) rank.push_back(std::to_string(u + 1));
  std::string out = RenderTable({{"averages", JoinRationals(averages.values)},
                                 {"user_rank", Join(rank)},
                                 {"weights", JoinRationals(decomposition.weights)},
                                 {"weighted_sum", dofkit::ToString(total)}});
  return out + "pattern:\n" + RenderMatrix(pattern);
}

std::string Alternating(const Scenario& s, const Options& opt) {
  if (!s.states) throw ScenarioError("states", "this command needs a \"states\" table");
  const std::size_t m = opt.subchannels ? *opt.subchannels
                        : s.subchannels  ? *s.subchannels
                                         : dofkit::MinimalRealizableSubchannels(*s.states);
  const auto q = dofkit::AlternatingToParallel(*s.states, m);
  const auto marginals = dofkit::MarginalProbabilities(*s.states);
  if (opt.format == "json") {
    return json{{"subchannels", m},
                {"alpha", dofkit::ToJson(q)},
                {"marginals", dofkit::ToJson(marginals)}}
               .dump(2) + "\n";
  }
  if (opt.format == "csv") return MatrixCsv(q);
  return RenderTable({{"subchannels", std::to_string(m)},
                      {"marginals", JoinRationals(marginals)}}) +
         "alpha:\n" + RenderMatrix(q);
}

std::string Simulate(const Scenario& s, const Options& opt) {
  dofkit::SimConfig cfg{RequireQuality(s), {}};
  cfg.snr_grid_db = s.sim.snr_db.value_or(std::vector<double>{30, 35, 40, 45, 50, 55, 60});
  if (!opt.snr.empty()) cfg.snr_grid_db = dofkit::ParseSnrList(opt.snr);
  if (s.sim.trials) cfg.trials = *s.sim.trials;
  if (opt.trials) cfg.trials = *opt.trials;
  if (s.sim.seed) cfg.seed = *s.sim.seed;
  if (opt.seed) cfg.seed = *opt.seed;
  if (s.sim.truncation_radius) cfg.truncation_radius = *s.sim.truncation_radius;
  cfg.threads = opt.threads;

  const auto report = dofkit::RunSimulation(cfg);
  if (report.redraws > 0) {
    std::cerr << "note: " << report.redraws << " singular estimates redrawn\n";
  }
  if (opt.format == "json") return dofkit::ToJson(report).dump(2) + "\n";
  if (opt.format == "csv") {
    std::string out = "snr_db,sum_rate,std_err\n";
    for (std::size_t i = 0; i < report.snr_db.size(); ++i) {
      out += Decimal(report.snr_db[i]) + "," + Decimal(report.sum_rate[i]) + "," +
             Decimal(report.std_error[i]) + "\n";
    }
    return out;
  }
  std::string out = "  snr_db    sum_rate     std_err\n";
  for (std::size_t i = 0; i < report.snr_db.size(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%8.2f  %10.4f  %10.4f\n", report.snr_db[i],
                  report.sum_rate[i], report.std_error[i]);
    out += buf;
  }
  return out + RenderTable({{"slope", Decimal(report.fit.slope)},
                            {"slope_std_err", Decimal(report.fit.std_error)},
                            {"target", dofkit::ToString(report.target)},
                            {"abs_slope_error", Decimal(report.abs_slope_error)}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-DoF analysis for MISO broadcast channels with partial CSIT"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "scenario JSON file, or - for stdin")->required();
    cmd->add_option("-f,--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("-o,--out", opt.out, "write output here instead of stdout");
  };
  using Handler = std::string (*)(const Scenario&, const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* analyze = app.add_subcommand("analyze", "sum-DoF bounds and separability");
  add_common(analyze);
  commands.emplace_back(analyze, Analyze);

  auto* region = app.add_subcommand("region", "inner and outer DoF regions");
  add_common(region);
  commands.emplace_back(region, Region);

  auto* pn = app.add_subcommand("pn", "PN-state decomposition and binary pattern");
  add_common(pn);
  pn->add_option("-m,--subchannels", opt.subchannels, "pattern width");
  commands.emplace_back(pn, Pn);

  auto* alternating = app.add_subcommand("alternating", "alternating CSIT to subchannels");
  add_common(alternating);
  alternating->add_option("-m,--subchannels", opt.subchannels, "number of subchannels");
  commands.emplace_back(alternating, Alternating);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo rate-splitting sum rate");
  add_common(simulate);
  simulate->add_option("--snr", opt.snr, "SNR grid in dB: start:step:stop or a,b,c");
  simulate->add_option("--trials", opt.trials, "channel draws per SNR point");
  simulate->add_option("--seed", opt.seed, "RNG seed");
  simulate->add_option("--threads", opt.threads, "worker threads, 0 for all cores");
  commands.emplace_back(simulate, Simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    const Scenario scenario = LoadScenario(opt.input);
    std::string output;
    for (const auto& [cmd, handler] : commands) {
      if (cmd->parsed()) output = handler(scenario, opt);
    }
    if (opt.out.empty()) {
      std::cout << output;
    } else {
      std::ofstream out(opt.out, std::ios::binary);
      if (!out) throw ScenarioError("--out", "cannot write " + opt.out);
      out << output;
    }
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what();
    if (!e.field().empty()) std::cerr << " [field " << e.field() << "]";
    std::cerr << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error (" << dofkit::ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    if (e.code() == ErrorCode::kInvalidArgument) return kExitParse;
    if (e.code() == ErrorCode::kNonRealizable) return kExitNonRealizable;
    return kExitDomain;
  }
  return 0;
}
