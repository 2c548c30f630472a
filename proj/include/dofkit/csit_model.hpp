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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dofkit/rational.hpp"

namespace dofkit {

// K x M grid of CSIT quality exponents. Row k holds user k over every
// subchannel, column m holds all users on subchannel m. Entries lie in [0, 1].
class QualityMatrix {
 public:
  // `rows` is K rows of M entries each. Throws kInvalidArgument when K or M
  // is zero, rows are ragged, or an entry is outside [0, 1].
  explicit QualityMatrix(std::vector<RationalVector> rows);

  std::size_t num_users() const { return num_users_; }
  std::size_t num_subchannels() const { return num_subchannels_; }

  const Rational& at(std::size_t user, std::size_t subchannel) const {
    return alpha_[user * num_subchannels_ + subchannel];
  }

  std::span<const Rational> row(std::size_t user) const {
    return {alpha_.data() + user * num_subchannels_, num_subchannels_};
  }

  RationalVector column(std::size_t subchannel) const;

  std::vector<RationalVector> rows() const;

  friend bool operator==(const QualityMatrix&, const QualityMatrix&) = default;

 private:
  std::size_t num_users_ = 0;
  std::size_t num_subchannels_ = 0;
  RationalVector alpha_;  // row-major
};

// Per-user mean quality over subchannels, in user order (not sorted).
struct AverageQualities {
  RationalVector values;

  std::size_t num_users() const { return values.size(); }
  friend bool operator==(const AverageQualities&,
                         const AverageQualities&) = default;
};

struct TotalOrderCertificate {
  bool ordered = false;
  // permutation[i] is the user placed at rank i (0-based, strongest first).
  // Present iff ordered.
  std::optional<std::vector<std::size_t>> permutation;
};

// Weights over the joint states P^0..P^K, where P^l gives perfect CSIT to
// the l strongest users and none to the rest.
struct PnDecomposition {
  RationalVector weights;              // size K + 1
  std::vector<std::size_t> user_rank;  // user_rank[i] = user with i-th largest average

  std::size_t num_users() const { return weights.size() - 1; }
};

// Probabilities over joint P/N states for the alternating-CSIT model. Labels
// are strings of length K over {'P', 'N'}; absent labels have probability 0.
class JointStateSpec {
 public:
  // Throws kInvalidArgument for malformed labels, negative probabilities, or
  // probabilities that do not sum to one.
  JointStateSpec(std::size_t num_users, std::map<std::string, Rational> table);

  std::size_t num_users() const { return num_users_; }
  const std::map<std::string, Rational>& table() const { return table_; }
  Rational probability(const std::string& label) const;

 private:
  std::size_t num_users_;
  std::map<std::string, Rational> table_;
};

AverageQualities ComputeAverageQualities(const QualityMatrix& q);

// Ordering of users by decreasing average, ties by lexicographically larger
// row, then by smaller index. This is the candidate used by CheckTotalOrder.
std::vector<std::size_t> CandidateUserOrder(const QualityMatrix& q);

// Users are totally ordered iff some permutation makes the rows element-wise
// nonincreasing. Dominance is transitive, so verifying the sorted candidate
// is sufficient.
TotalOrderCertificate CheckTotalOrder(const QualityMatrix& q);

// Weights w_l = a_l - a_{l+1} over the averages sorted in decreasing order,
// with a_0 = 1 and a_{K+1} = 0.
PnDecomposition DecomposePn(const AverageQualities& averages);

// Binary, totally ordered pattern with the given row averages: each user
// holds ones in its first M * a_k subchannels. When `num_subchannels` is
// empty the smallest realizable M (lcm of denominators) is used. Throws
// kNonRealizable if M * a_k is not an integer for some k.
QualityMatrix ConstructPnPattern(
    const AverageQualities& averages,
    std::optional<std::size_t> num_subchannels = std::nullopt);

// Smallest M for which every M * lambda^s is an integer.
std::size_t MinimalRealizableSubchannels(const JointStateSpec& spec);

// Maps each joint state to M * lambda^s binary subchannels. Columns are
// grouped by state, states in descending count of 'P', ties by label.
// Throws kNonRealizable if some M * lambda^s is not an integer.
QualityMatrix AlternatingToParallel(const JointStateSpec& spec,
                                    std::size_t num_subchannels);

// lambda_k^P = sum of lambda^s over states with s_k = 'P'.
RationalVector MarginalProbabilities(const JointStateSpec& spec);

}  // namespace dofkit
