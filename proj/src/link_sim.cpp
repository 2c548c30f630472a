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

#include "dofkit/link_sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "dofkit/dof_bounds.hpp"
#include "dofkit/error.hpp"

namespace dofkit {
namespace {

constexpr double kSingularRcond = 1e-10;
constexpr std::size_t kMaxRedraws = 64;

std::complex<double> Clamp(std::complex<double> z, double radius) {
  const double lo = 1.0 / radius;
  const double mag = std::abs(z);
  if (mag == 0.0) return {lo, 0.0};
  if (mag < lo) return z * (lo / mag);
  if (mag > radius) return z * (radius / mag);
  return z;
}

std::vector<double> ToDoubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_d());
  return out;
}

double DbToPower(double db) { return std::pow(10.0, db / 10.0); }

struct TrialResults {
  std::vector<double> rates;  // [trial][power], row-major
  std::size_t redraws = 0;
};

// Per-subchannel sum rate of one trial at every power, averaged over subchannels.
void EvaluateTrial(const SimConfig& cfg,
                   const std::vector<std::vector<double>>& columns,
                   std::span<const double> powers, std::uint64_t trial,
                   std::span<double> out, std::size_t& redraws) {
  const ChannelRealization realization = GenerateChannels(cfg, trial);
  const double inv_m = 1.0 / static_cast<double>(cfg.quality.num_subchannels());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    double total = 0.0;
    for (std::size_t m = 0; m < realization.subchannels.size(); ++m) {
      total += RateSplittingRates(realization.subchannels[m], columns[m], powers[i]).Sum();
    }
    out[i] = total * inv_m;
  }
  for (const auto& sub : realization.subchannels) redraws += sub.redraws;
}

TrialResults RunTrials(const SimConfig& cfg, std::span<const double> powers) {
  std::vector<std::vector<double>> columns;
  for (std::size_t m = 0; m < cfg.quality.num_subchannels(); ++m) {
    const auto col = cfg.quality.column(m);
    columns.push_back(ToDoubles(col));
  }

  TrialResults results;
  results.rates.assign(cfg.trials * powers.size(), 0.0);
  std::size_t workers = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  workers = std::clamp<std::size_t>(workers, 1, cfg.trials);

  // Trials are split into contiguous blocks; each result slot is written by
  // exactly one worker, so the reduction below sees the same data for any
  // worker count.
  std::vector<std::size_t> redraws(workers, 0);
  auto work = [&](std::size_t w) {
    const std::size_t begin = cfg.trials * w / workers;
    const std::size_t end = cfg.trials * (w + 1) / workers;
    for (std::size_t t = begin; t < end; ++t) {
      std::span<double> slot(results.rates.data() + t * powers.size(), powers.size());
      EvaluateTrial(cfg, columns, powers, t, slot, redraws[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto r : redraws) results.redraws += r;
  return results;
}

// Mean and standard error of column `index`, summed in trial order.
ErgodicRate Aggregate(const TrialResults& results, std::size_t trials,
                      std::size_t num_powers, std::size_t index) {
  double sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) sum += results.rates[t * num_powers + index];
  const double mean = sum / static_cast<double>(trials);
  double sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double d = results.rates[t * num_powers + index] - mean;
    sq += d * d;
  }
  const double var = trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(trials)), results.redraws};
}

}  // namespace

void SimConfig::Validate() const {
  if (snr_grid_db.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "SNR grid needs at least 3 points");
  }
  for (std::size_t i = 1; i < snr_grid_db.size(); ++i) {
    if (!(snr_grid_db[i] > snr_grid_db[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "SNR grid must be strictly ascending");
    }
  }
  if (snr_grid_db.back() - snr_grid_db.front() < 20.0) {
    throw Error(ErrorCode::kInvalidArgument, "SNR grid must span at least 20 dB");
  }
  if (trials < 100) {
    throw Error(ErrorCode::kInvalidArgument,
                "trials must be ≥ 100, got " + std::to_string(trials));
  }
  if (!(truncation_radius > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "truncation radius must exceed 1");
  }
}

Eigen::MatrixXcd SubchannelRealization::TrueChannel(std::span<const double> alpha,
                                                    double power) const {
  Eigen::MatrixXcd h = estimate;
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    const double error_amplitude = std::pow(power, -alpha[static_cast<std::size_t>(k)] / 2.0);
    h.row(k) += error_amplitude * error.row(k);
  }
  return h;
}

SubchannelRealization DrawSubchannel(std::size_t num_users, std::uint64_t seed,
                                     std::uint64_t trial, std::uint64_t subchannel,
                                     std::uint64_t attempt, double truncation_radius) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(trial), hi(trial),
                    lo(subchannel), hi(subchannel), lo(attempt), hi(attempt)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));

  const auto k = static_cast<Eigen::Index>(num_users);
  SubchannelRealization out{Eigen::MatrixXcd(k, k), Eigen::MatrixXcd(k, k), 0};
  for (Eigen::MatrixXcd* m : {&out.estimate, &out.error}) {
    for (Eigen::Index r = 0; r < k; ++r) {
      for (Eigen::Index c = 0; c < k; ++c) {
        const double re = normal(rng);
        const double im = normal(rng);
        (*m)(r, c) = Clamp({re, im}, truncation_radius);
      }
    }
  }
  return out;
}

ChannelRealization GenerateChannels(const SimConfig& cfg, std::uint64_t trial) {
  ChannelRealization out;
  const std::size_t k = cfg.quality.num_users();
  out.subchannels.reserve(cfg.quality.num_subchannels());
  for (std::size_t m = 0; m < cfg.quality.num_subchannels(); ++m) {
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == kMaxRedraws) {
        throw Error(ErrorCode::kSingularEstimate,
                    "estimate matrix singular after " + std::to_string(kMaxRedraws) +
                        " redraws");
      }
      auto sub = DrawSubchannel(k, cfg.seed, trial, m, attempt, cfg.truncation_radius);
      try {
        ZeroForcingPrecoders(sub.estimate);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSingularEstimate) throw;
        continue;
      }
      sub.redraws = attempt;
      out.subchannels.push_back(std::move(sub));
      break;
    }
  }
  return out;
}

Eigen::MatrixXcd ZeroForcingPrecoders(const Eigen::MatrixXcd& estimate) {
  const Eigen::Index k = estimate.rows();
  if (k == 1) return Eigen::MatrixXcd::Ones(1, 1);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(estimate);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0 || s(k - 1) / s(0) < kSingularRcond) {
    throw Error(ErrorCode::kSingularEstimate, "estimate matrix is rank deficient");
  }
  // Column k of the inverse is orthogonal to every other user's estimate.
  Eigen::MatrixXcd w = estimate.partialPivLu().inverse();
  w.colwise().normalize();
  return w;
}

PowerSplit RateSplittingPowerSplit(std::span<const double> alpha, double power) {
  const double beta = *std::max_element(alpha.begin(), alpha.end());
  const double private_total = std::min(std::pow(power, beta), power);
  return {power - private_total, private_total / static_cast<double>(alpha.size())};
}

double SubchannelRates::Sum() const {
  double total = common;
  for (double r : private_rates) total += r;
  return total;
}

SubchannelRates RateSplittingRates(const SubchannelRealization& realization,
                                   std::span<const double> alpha, double power) {
  const Eigen::Index k_users = realization.estimate.rows();
  const Eigen::MatrixXcd h = realization.TrueChannel(alpha, power);
  const Eigen::MatrixXcd w = ZeroForcingPrecoders(realization.estimate);
  const Eigen::VectorXcd common_dir =
      Eigen::VectorXcd::Ones(k_users) / std::sqrt(static_cast<double>(k_users));
  const PowerSplit split = RateSplittingPowerSplit(alpha, power);

  // gain(k, j) = |h_k w_j|^2
  const Eigen::MatrixXd gain = (h * w).cwiseAbs2();
  const Eigen::VectorXd common_gain = (h * common_dir).cwiseAbs2();

  SubchannelRates out;
  out.private_rates.resize(static_cast<std::size_t>(k_users));
  double common = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < k_users; ++k) {
    const double all_private = gain.row(k).sum() * split.per_private;
    const double own = gain(k, k) * split.per_private;
    const double common_sinr = common_gain(k) * split.common / (1.0 + all_private);
    common = std::min(common, std::log2(1.0 + common_sinr));
    const double private_sinr = own / (1.0 + all_private - own);
    out.private_rates[static_cast<std::size_t>(k)] = std::log2(1.0 + private_sinr);
  }
  out.common = common;
  return out;
}

ErgodicRate ErgodicSumRate(const SimConfig& cfg, double power) {
  cfg.Validate();
  const double powers[] = {power};
  const TrialResults results = RunTrials(cfg, powers);
  return Aggregate(results, cfg.trials, 1, 0);
}

SlopeFit EstimateDofSlope(std::span<const double> snr_db,
                          std::span<const double> sum_rate) {
  if (snr_db.size() != sum_rate.size()) {
    throw Error(ErrorCode::kInvalidArgument, "SNR grid and rates differ in length");
  }
  const std::size_t n = snr_db.size();
  if (n < 3) {
    throw Error(ErrorCode::kInsufficientPoints,
                "slope fit needs at least 3 points, got " + std::to_string(n));
  }
  const std::size_t used = std::max<std::size_t>(3, (n + 1) / 2);
  const std::size_t first = n - used;

  const double log2_10 = std::log2(10.0);
  std::vector<double> x(used);
  std::vector<double> y(used);
  for (std::size_t i = 0; i < used; ++i) {
    x[i] = snr_db[first + i] / 10.0 * log2_10;
    y[i] = sum_rate[first + i];
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < used; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(used);
  my /= static_cast<double>(used);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < used; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::kInsufficientPoints, "SNR points are not distinct");
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points_used = used;
  double ssr = 0.0;
  for (std::size_t i = 0; i < used; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += r * r;
  }
  fit.std_error = std::sqrt(ssr / static_cast<double>(used - 2) / sxx);
  return fit;
}

SimReport RunSimulation(const SimConfig& cfg) {
  cfg.Validate();
  std::vector<double> powers;
  powers.reserve(cfg.snr_grid_db.size());
  for (double db : cfg.snr_grid_db) powers.push_back(DbToPower(db));

  const TrialResults results = RunTrials(cfg, powers);
  SimReport report;
  report.snr_db = cfg.snr_grid_db;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    const ErgodicRate r = Aggregate(results, cfg.trials, powers.size(), i);
    report.sum_rate.push_back(r.mean);
    report.std_error.push_back(r.std_error);
  }
  report.redraws = results.redraws;
  report.fit = EstimateDofSlope(report.snr_db, report.sum_rate);
  report.target = SeparateCodingSumDof(cfg.quality);
  report.abs_slope_error = std::abs(report.fit.slope - report.target.get_d());
  return report;
}

}  // namespace dofkit
