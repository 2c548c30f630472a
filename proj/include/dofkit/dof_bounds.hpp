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
#include <optional>
#include <span>
#include <vector>

#include "dofkit/csit_model.hpp"
#include "dofkit/rational.hpp"

namespace dofkit {

// Scalar sum-DoF figures for one quality matrix. When `separable` is false
// the optimum sum-DoF is only known to lie in [achievable_separate, upperbound].
struct SumDofReport {
  Rational upperbound;
  Rational achievable_separate;
  RationalVector per_subchannel;  // stand-alone sum-DoF of each subchannel
  bool separable = false;         // achievable_separate == upperbound
  bool totally_ordered = false;   // equality is then a proven optimum
};

// 1 + sum(values) - max(values) for a nonempty list; the common kernel of
// every sum-DoF bound in the toolkit.
Rational SubsetSumDof(std::span<const Rational> values);

// Upper bound on the sum-DoF of the users in `subset` (0-based indices),
// evaluated on average qualities. Defaults to all users. Throws kEmptySubset
// for an empty subset and kIndexOutOfRange for an unknown user.
Rational SumDofUpperbound(
    const AverageQualities& averages,
    const std::optional<std::vector<std::size_t>>& subset = std::nullopt);
Rational SumDofUpperbound(
    const QualityMatrix& q,
    const std::optional<std::vector<std::size_t>>& subset = std::nullopt);

// Stand-alone sum-DoF of subchannel m (0-based), not normalized by M.
Rational PerSubchannelSumDof(const QualityMatrix& q, std::size_t subchannel);

// Sum-DoF of coding each subchannel separately:
//   1 + sum_k a_k - (1/M) sum_m max_k alpha_k^[m].
Rational SeparateCodingSumDof(const QualityMatrix& q);

SumDofReport SeparabilityReport(const QualityMatrix& q);

// max{1, l}; throws kRangeError unless 0 <= l <= K.
Rational PnStateSumDof(int l, int num_users);

// sum_l w_l * max{1, l}.
Rational PnWeightedSum(const PnDecomposition& decomposition);

}  // namespace dofkit
