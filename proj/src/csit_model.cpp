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

#include "dofkit/csit_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dofkit/error.hpp"

namespace dofkit {
namespace {

bool InUnitInterval(const Rational& v) { return v >= 0 && v <= 1; }

// a >= b element-wise.
bool Dominates(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

std::size_t CountP(const std::string& label) {
  return static_cast<std::size_t>(std::count(label.begin(), label.end(), 'P'));
}

std::size_t ToSize(const Rational& integral) {
  return static_cast<std::size_t>(integral.get_num().get_ui());
}

}  // namespace

QualityMatrix::QualityMatrix(std::vector<RationalVector> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "users must be ≥ 1");
  }
  if (rows.front().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "subchannels must be ≥ 1");
  }
  num_users_ = rows.size();
  num_subchannels_ = rows.front().size();
  alpha_.reserve(num_users_ * num_subchannels_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != num_subchannels_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row " + std::to_string(k) + " has " +
                      std::to_string(rows[k].size()) + " entries, expected " +
                      std::to_string(num_subchannels_));
    }
    for (std::size_t m = 0; m < num_subchannels_; ++m) {
      if (!InUnitInterval(rows[k][m])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "alpha[" + std::to_string(k) + "][" + std::to_string(m) +
                        "] = " + ToString(rows[k][m]) + " is outside [0, 1]");
      }
      alpha_.push_back(std::move(rows[k][m]));
    }
  }
}

RationalVector QualityMatrix::column(std::size_t subchannel) const {
  RationalVector out;
  out.reserve(num_users_);
  for (std::size_t k = 0; k < num_users_; ++k) out.push_back(at(k, subchannel));
  return out;
}

std::vector<RationalVector> QualityMatrix::rows() const {
  std::vector<RationalVector> out;
  out.reserve(num_users_);
  for (std::size_t k = 0; k < num_users_; ++k) {
    auto r = row(k);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

JointStateSpec::JointStateSpec(std::size_t num_users,
                               std::map<std::string, Rational> table)
    : num_users_(num_users), table_(std::move(table)) {
  if (num_users_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "users must be ≥ 1");
  }
  Rational total = 0;
  for (const auto& [label, prob] : table_) {
    if (label.size() != num_users_ ||
        label.find_first_not_of("PN") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "state label '" + label + "' must be " +
                      std::to_string(num_users_) + " characters from {P, N}");
    }
    if (prob < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "state '" + label + "' has negative probability");
    }
    total += prob;
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "state probabilities sum to " + ToString(total) + ", not 1");
  }
}

Rational JointStateSpec::probability(const std::string& label) const {
  auto it = table_.find(label);
  return it == table_.end() ? Rational(0) : it->second;
}

AverageQualities ComputeAverageQualities(const QualityMatrix& q) {
  AverageQualities out;
  out.values.reserve(q.num_users());
  const Rational m(static_cast<unsigned long>(q.num_subchannels()));
  for (std::size_t k = 0; k < q.num_users(); ++k) {
    out.values.push_back(Sum(q.row(k)) / m);
  }
  return out;
}

std::vector<std::size_t> CandidateUserOrder(const QualityMatrix& q) {
  const auto averages = ComputeAverageQualities(q).values;
  std::vector<std::size_t> order(q.num_users());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (averages[a] != averages[b]) return averages[a] > averages[b];
    auto ra = q.row(a);
    auto rb = q.row(b);
    return std::lexicographical_compare(rb.begin(), rb.end(), ra.begin(), ra.end());
  });
  return order;
}

TotalOrderCertificate CheckTotalOrder(const QualityMatrix& q) {
  auto order = CandidateUserOrder(q);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!Dominates(q.row(order[i]), q.row(order[i + 1]))) return {};
  }
  return {true, std::move(order)};
}

PnDecomposition DecomposePn(const AverageQualities& averages) {
  const std::size_t k_users = averages.num_users();
  PnDecomposition out;
  out.user_rank.resize(k_users);
  std::iota(out.user_rank.begin(), out.user_rank.end(), 0);
  std::stable_sort(out.user_rank.begin(), out.user_rank.end(),
                   [&](std::size_t a, std::size_t b) {
                     return averages.values[a] > averages.values[b];
                   });

  // sorted[0] = 1 and sorted[K + 1] = 0 bracket the averages.
  RationalVector sorted;
  sorted.reserve(k_users + 2);
  sorted.emplace_back(1);
  for (std::size_t user : out.user_rank) sorted.push_back(averages.values[user]);
  sorted.emplace_back(0);

  out.weights.reserve(k_users + 1);
  for (std::size_t l = 0; l <= k_users; ++l) {
    out.weights.push_back(sorted[l] - sorted[l + 1]);
  }
  return out;
}

QualityMatrix ConstructPnPattern(const AverageQualities& averages,
                                 std::optional<std::size_t> num_subchannels) {
  for (const auto& a : averages.values) {
    if (!InUnitInterval(a)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "average quality " + ToString(a) + " is outside [0, 1]");
    }
  }
  std::size_t m = 0;
  if (num_subchannels) {
    if (*num_subchannels == 0) {
      throw Error(ErrorCode::kInvalidArgument, "subchannels must be ≥ 1");
    }
    m = *num_subchannels;
  } else {
    const mpz_class lcm = DenominatorLcm(averages.values);
    if (!lcm.fits_ulong_p()) {
      throw Error(ErrorCode::kNonRealizable, "minimal subchannel count overflows");
    }
    m = lcm.get_ui();
  }

  const Rational m_rational(static_cast<unsigned long>(m));
  std::vector<RationalVector> rows;
  rows.reserve(averages.num_users());
  for (std::size_t k = 0; k < averages.num_users(); ++k) {
    const Rational ones = averages.values[k] * m_rational;
    if (!IsInteger(ones)) {
      throw Error(ErrorCode::kNonRealizable,
                  "M = " + std::to_string(m) + " cannot realize average " +
                      ToString(averages.values[k]) + " of user " +
                      std::to_string(k));
    }
    RationalVector row(m, Rational(0));
    std::fill_n(row.begin(), ToSize(ones), Rational(1));
    rows.push_back(std::move(row));
  }
  return QualityMatrix(std::move(rows));
}

std::size_t MinimalRealizableSubchannels(const JointStateSpec& spec) {
  RationalVector probs;
  for (const auto& [label, prob] : spec.table()) probs.push_back(prob);
  const mpz_class lcm = DenominatorLcm(probs);
  if (!lcm.fits_ulong_p()) {
    throw Error(ErrorCode::kNonRealizable, "minimal subchannel count overflows");
  }
  return lcm.get_ui();
}

QualityMatrix AlternatingToParallel(const JointStateSpec& spec,
                                    std::size_t num_subchannels) {
  if (num_subchannels == 0) {
    throw Error(ErrorCode::kInvalidArgument, "subchannels must be ≥ 1");
  }
  std::vector<std::string> labels;
  for (const auto& [label, prob] : spec.table()) {
    if (prob > 0) labels.push_back(label);
  }
  // std::map iteration is already label-ordered; stable sort keeps that for ties.
  std::stable_sort(labels.begin(), labels.end(),
                   [](const std::string& a, const std::string& b) {
                     return CountP(a) > CountP(b);
                   });

  const Rational m_rational(static_cast<unsigned long>(num_subchannels));
  std::vector<RationalVector> rows(spec.num_users());
  for (const auto& label : labels) {
    const Rational count = spec.probability(label) * m_rational;
    if (!IsInteger(count)) {
      throw Error(ErrorCode::kNonRealizable,
                  "M = " + std::to_string(num_subchannels) +
                      " cannot realize probability " +
                      ToString(spec.probability(label)) + " of state " + label);
    }
    for (std::size_t c = 0; c < ToSize(count); ++c) {
      for (std::size_t k = 0; k < spec.num_users(); ++k) {
        rows[k].emplace_back(label[k] == 'P' ? 1 : 0);
      }
    }
  }
  return QualityMatrix(std::move(rows));
}

RationalVector MarginalProbabilities(const JointStateSpec& spec) {
  RationalVector out(spec.num_users(), Rational(0));
  for (const auto& [label, prob] : spec.table()) {
    for (std::size_t k = 0; k < spec.num_users(); ++k) {
      if (label[k] == 'P') out[k] += prob;
    }
  }
  return out;
}

}  // namespace dofkit
