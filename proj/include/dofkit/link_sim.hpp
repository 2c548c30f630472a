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

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dofkit/csit_model.hpp"
#include "dofkit/rational.hpp"

namespace dofkit {

struct SimConfig {
  QualityMatrix quality;
  std::vector<double> snr_grid_db;  // ascending; P = 10^(dB/10)
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
  double truncation_radius = 1e3;  // entry magnitudes clamped to [1/r, r]
  std::size_t threads = 1;         // 0 selects hardware concurrency

  // Throws kInvalidArgument unless the grid is ascending with >= 3 points
  // spanning >= 20 dB, trials >= 100, and truncation_radius > 1.
  void Validate() const;
};

// Estimates and errors for one subchannel of one trial. Row k of each
// matrix is user k's 1 x K channel vector. Independent of P, so a single
// draw serves the whole SNR grid.
struct SubchannelRealization {
  Eigen::MatrixXcd estimate;
  Eigen::MatrixXcd error;
  std::size_t redraws = 0;

  // h_k = hhat_k + P^(-alpha_k / 2) htilde_k
  Eigen::MatrixXcd TrueChannel(std::span<const double> alpha, double power) const;
};

struct ChannelRealization {
  std::vector<SubchannelRealization> subchannels;
};

// Draws clamped CN(0, 1) estimates and errors for one subchannel. The stream
// is keyed by (seed, trial, subchannel, attempt) only, so results do not
// depend on scheduling.
SubchannelRealization DrawSubchannel(std::size_t num_users, std::uint64_t seed,
                                     std::uint64_t trial, std::uint64_t subchannel,
                                     std::uint64_t attempt,
                                     double truncation_radius);

// All subchannels of one trial. Draws whose estimate matrix is singular
// (see ZeroForcingPrecoders) are redrawn with the next attempt index.
ChannelRealization GenerateChannels(const SimConfig& cfg, std::uint64_t trial);

// Unit-norm zero-forcing directions: column k is orthogonal to every
// estimate hhat_i with i != k. Throws kSingularEstimate when the estimate
// matrix has reciprocal condition number below 1e-10.
Eigen::MatrixXcd ZeroForcingPrecoders(const Eigen::MatrixXcd& estimate);

struct PowerSplit {
  double common = 0.0;
  double per_private = 0.0;
};

// Every private stream gets min(P^beta, P) / K and the common stream takes
// what is left of P, where beta = max_k alpha_k on the subchannel.
PowerSplit RateSplittingPowerSplit(std::span<const double> alpha, double power);

struct SubchannelRates {
  double common = 0.0;
  std::vector<double> private_rates;

  double Sum() const;
};

// Shannon rates (bits per channel use) of one subchannel under two-layer
// rate-splitting. The common stream is decoded first at every user treating
// private streams as noise; private streams are then decoded after perfect
// cancellation of the common stream. All SINRs use the true channels.
SubchannelRates RateSplittingRates(const SubchannelRealization& realization,
                                   std::span<const double> alpha, double power);

struct ErgodicRate {
  double mean = 0.0;       // bits / channel use / subchannel
  double std_error = 0.0;  // standard error of the mean
  std::size_t redraws = 0;
};

ErgodicRate ErgodicSumRate(const SimConfig& cfg, double power);

struct SlopeFit {
  double slope = 0.0;
  double std_error = 0.0;
  double intercept = 0.0;
  std::size_t points_used = 0;
};

// Least-squares slope of rate against log2(P) over the upper half of the
// SNR grid (at least three points). Throws kInsufficientPoints for fewer
// than three points.
SlopeFit EstimateDofSlope(std::span<const double> snr_db,
                          std::span<const double> sum_rate);

struct SimReport {
  std::vector<double> snr_db;
  std::vector<double> sum_rate;
  std::vector<double> std_error;
  SlopeFit fit;
  Rational target;  // separate-coding sum-DoF of the quality matrix
  double abs_slope_error = 0.0;
  std::size_t redraws = 0;
};

SimReport RunSimulation(const SimConfig& cfg);

}  // namespace dofkit
