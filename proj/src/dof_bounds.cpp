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

#include "dofkit/dof_bounds.hpp"

#include <algorithm>
#include <string>

#include "dofkit/error.hpp"

namespace dofkit {

Rational SubsetSumDof(std::span<const Rational> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptySubset, "sum-DoF of an empty user set");
  }
  return 1 + Sum(values) - *std::max_element(values.begin(), values.end());
}

Rational SumDofUpperbound(const AverageQualities& averages,
                          const std::optional<std::vector<std::size_t>>& subset) {
  if (!subset) return SubsetSumDof(averages.values);
  if (subset->empty()) {
    throw Error(ErrorCode::kEmptySubset, "user subset must be nonempty");
  }
  RationalVector selected;
  selected.reserve(subset->size());
  for (std::size_t user : *subset) {
    if (user >= averages.num_users()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "user " + std::to_string(user) + " out of range");
    }
    selected.push_back(averages.values[user]);
  }
  return SubsetSumDof(selected);
}

Rational SumDofUpperbound(const QualityMatrix& q,
                          const std::optional<std::vector<std::size_t>>& subset) {
  return SumDofUpperbound(ComputeAverageQualities(q), subset);
}

Rational PerSubchannelSumDof(const QualityMatrix& q, std::size_t subchannel) {
  if (subchannel >= q.num_subchannels()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "subchannel " + std::to_string(subchannel) + " out of range");
  }
  return SubsetSumDof(q.column(subchannel));
}

Rational SeparateCodingSumDof(const QualityMatrix& q) {
  Rational total = 0;
  Rational max_sum = 0;
  for (std::size_t m = 0; m < q.num_subchannels(); ++m) {
    const auto col = q.column(m);
    total += Sum(col);
    max_sum += *std::max_element(col.begin(), col.end());
  }
  const Rational m(static_cast<unsigned long>(q.num_subchannels()));
  return 1 + (total - max_sum) / m;
}

SumDofReport SeparabilityReport(const QualityMatrix& q) {
  SumDofReport report;
  report.upperbound = SumDofUpperbound(q);
  report.achievable_separate = SeparateCodingSumDof(q);
  report.per_subchannel.reserve(q.num_subchannels());
  for (std::size_t m = 0; m < q.num_subchannels(); ++m) {
    report.per_subchannel.push_back(PerSubchannelSumDof(q, m));
  }
  report.separable = report.achievable_separate == report.upperbound;
  report.totally_ordered = CheckTotalOrder(q).ordered;
  return report;
}

Rational PnStateSumDof(int l, int num_users) {
  if (l < 0 || l > num_users) {
    throw Error(ErrorCode::kRangeError,
                "state P^" + std::to_string(l) + " needs 0 <= l <= K = " +
                    std::to_string(num_users));
  }
  return Rational(std::max(1, l));
}

Rational PnWeightedSum(const PnDecomposition& decomposition) {
  Rational total = 0;
  const int k_users = static_cast<int>(decomposition.num_users());
  for (int l = 0; l <= k_users; ++l) {
    total += decomposition.weights[static_cast<std::size_t>(l)] *
             PnStateSumDof(l, k_users);
  }
  return total;
}

}  // namespace dofkit
