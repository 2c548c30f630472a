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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dofkit/error.hpp"
#include "test_support.hpp"

namespace dofkit {
namespace {

using testing::FromColumns;
using testing::Matrix;
using testing::R;
using testing::Rs;

QualityMatrix StaircasePattern() {
  return Matrix({{"1", "1", "1", "0"}, {"1", "1", "0", "0"}, {"1", "0", "0", "0"}});
}

QualityMatrix CyclicCounterexample() {
  return FromColumns({Rs({"1", "0", "0"}), Rs({"0", "1", "0"}), Rs({"0", "0", "1"})});
}

TEST(QualityMatrixTest, RejectsInvalidShapesAndValues) {
  EXPECT_THROW(QualityMatrix({}), Error);
  EXPECT_THROW(QualityMatrix({RationalVector{}}), Error);
  EXPECT_THROW(Matrix({{"1", "0"}, {"1"}}), Error);
  EXPECT_THROW(Matrix({{"1", "3/2"}}), Error);
  EXPECT_THROW(Matrix({{"-1/4"}}), Error);
}

TEST(AverageQualitiesTest, WorkedExamples) {
  EXPECT_EQ(ComputeAverageQualities(StaircasePattern()).values, Rs({"3/4", "1/2", "1/4"}));
  EXPECT_EQ(ComputeAverageQualities(Matrix({{"0", "0", "0"}, {"0", "0", "0"}})).values,
            Rs({"0", "0"}));
  EXPECT_EQ(ComputeAverageQualities(CyclicCounterexample()).values,
            Rs({"1/3", "1/3", "1/3"}));
}

TEST(TotalOrderTest, CyclicPatternIsNotOrdered) {
  const auto cert = CheckTotalOrder(CyclicCounterexample());
  EXPECT_FALSE(cert.ordered);
  EXPECT_FALSE(cert.permutation.has_value());
}

TEST(TotalOrderTest, SingleSubchannelAlwaysOrdered) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto q = testing::RandomMatrix(rng, testing::RandomIn(rng, 1, 6), 1);
    EXPECT_TRUE(CheckTotalOrder(q).ordered);
  }
}

TEST(TotalOrderTest, SingleUserIdentity) {
  const auto cert = CheckTotalOrder(Matrix({{"1/2", "0", "1"}}));
  ASSERT_TRUE(cert.ordered);
  EXPECT_EQ(*cert.permutation, std::vector<std::size_t>{0});
}

TEST(TotalOrderTest, TieBreaking) {
  // Users 1 and 2 tie on average; user 2 has the lexicographically larger
  // row. Users 0 and 3 are identical, so index order decides.
  const auto q = Matrix({{"0", "0"}, {"1/2", "1/2"}, {"1", "0"}, {"0", "0"}});
  EXPECT_EQ(CandidateUserOrder(q), (std::vector<std::size_t>{2, 1, 0, 3}));
  EXPECT_FALSE(CheckTotalOrder(q).ordered);

  const auto ordered = Matrix({{"0", "0"}, {"1", "1/2"}, {"1/2", "1/2"}, {"0", "0"}});
  const auto cert = CheckTotalOrder(ordered);
  ASSERT_TRUE(cert.ordered);
  EXPECT_EQ(*cert.permutation, (std::vector<std::size_t>{1, 2, 0, 3}));
}

// Brute force: try every permutation.
bool OrderedByEnumeration(const QualityMatrix& q) {
  std::vector<std::size_t> perm(q.num_users());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i) {
      for (std::size_t m = 0; m < q.num_subchannels(); ++m) {
        if (q.at(perm[i], m) < q.at(perm[i + 1], m)) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(TotalOrderTest, AgreesWithPermutationEnumeration) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t k = testing::RandomIn(rng, 1, 5);
    const std::size_t m = testing::RandomIn(rng, 1, 4);
    // Binary entries make comparable rows common enough to exercise both answers.
    std::vector<RationalVector> rows(k);
    for (auto& row : rows) {
      for (std::size_t j = 0; j < m; ++j) row.emplace_back(testing::RandomIn(rng, 0, 1));
    }
    const QualityMatrix q(rows);
    const auto cert = CheckTotalOrder(q);
    ASSERT_EQ(cert.ordered, OrderedByEnumeration(q));
    if (!cert.ordered) continue;
    const auto& perm = *cert.permutation;
    for (std::size_t r = 0; r + 1 < perm.size(); ++r) {
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_GE(q.at(perm[r], j), q.at(perm[r + 1], j));
      }
    }
  }
}

TEST(TotalOrderTest, RelabelingUsersIsCovariant) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = testing::RandomIn(rng, 2, 5);
    const auto q = testing::RandomMatrix(rng, k, testing::RandomIn(rng, 1, 4));
    std::vector<std::size_t> relabel(k);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<RationalVector> rows(k);
    for (std::size_t u = 0; u < k; ++u) {
      auto r = q.row(relabel[u]);
      rows[u].assign(r.begin(), r.end());
    }
    const QualityMatrix shuffled(rows);
    const auto a = CheckTotalOrder(q);
    const auto b = CheckTotalOrder(shuffled);
    ASSERT_EQ(a.ordered, b.ordered);
    if (!a.ordered) continue;
    // The certified chains must list the same rows in the same order.
    for (std::size_t r = 0; r < k; ++r) {
      auto ra = q.row((*a.permutation)[r]);
      auto rb = shuffled.row((*b.permutation)[r]);
      EXPECT_TRUE(std::equal(ra.begin(), ra.end(), rb.begin()));
    }
  }
}

TEST(PnDecompositionTest, WorkedExamples) {
  EXPECT_EQ(DecomposePn({Rs({"3/4", "1/2", "1/4"})}).weights,
            Rs({"1/4", "1/4", "1/4", "1/4"}));
  EXPECT_EQ(DecomposePn({Rs({"1", "1", "1"})}).weights, Rs({"0", "0", "0", "1"}));
  EXPECT_EQ(DecomposePn({Rs({"0", "0"})}).weights, Rs({"1", "0", "0"}));
}

TEST(PnDecompositionTest, SortsInternally) {
  const auto d = DecomposePn({Rs({"1/4", "3/4", "1/2"})});
  EXPECT_EQ(d.weights, Rs({"1/4", "1/4", "1/4", "1/4"}));
  EXPECT_EQ(d.user_rank, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(PnDecompositionTest, WeightsAreADistributionWithTailSums) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = testing::RandomIn(rng, 1, 7);
    AverageQualities a;
    for (std::size_t u = 0; u < k; ++u) a.values.push_back(testing::RandomQuality(rng));
    const auto d = DecomposePn(a);
    ASSERT_EQ(d.weights.size(), k + 1);
    EXPECT_EQ(Sum(d.weights), 1);
    for (const auto& w : d.weights) EXPECT_GE(w, 0);
    for (std::size_t rank = 0; rank < k; ++rank) {
      Rational tail = 0;
      for (std::size_t l = rank + 1; l <= k; ++l) tail += d.weights[l];
      EXPECT_EQ(tail, a.values[d.user_rank[rank]]);
    }
  }
}

TEST(PnPatternTest, StaircaseLayout) {
  EXPECT_EQ(ConstructPnPattern({Rs({"3/4", "1/2", "1/4"})}, 4), StaircasePattern());
  EXPECT_EQ(ConstructPnPattern({Rs({"1"})}, 1), Matrix({{"1"}}));
}

TEST(PnPatternTest, MinimalSubchannelCount) {
  const auto q = ConstructPnPattern({Rs({"2/3", "1/3"})});
  EXPECT_EQ(q, Matrix({{"1", "1", "0"}, {"1", "0", "0"}}));
  EXPECT_EQ(ComputeAverageQualities(q).values, Rs({"2/3", "1/3"}));
}

TEST(PnPatternTest, NonRealizableSubchannelCount) {
  try {
    ConstructPnPattern({Rs({"1/3"})}, 4);
    FAIL() << "expected NonRealizable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonRealizable);
  }
}

TEST(PnPatternTest, RoundTripOrderAndStateCounts) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const std::size_t k = testing::RandomIn(rng, 1, 6);
    AverageQualities a;
    for (std::size_t u = 0; u < k; ++u) a.values.push_back(testing::RandomQuality(rng));
    const std::size_t minimal = DenominatorLcm(a.values).get_ui();
    const std::size_t m = minimal * testing::RandomIn(rng, 1, 3);
    const auto q = ConstructPnPattern(a, m);
    ASSERT_EQ(q.num_subchannels(), m);
    EXPECT_EQ(ComputeAverageQualities(q), a);
    EXPECT_TRUE(CheckTotalOrder(q).ordered);

    // Exactly M * w_l columns carry l ones.
    const auto w = DecomposePn(a).weights;
    std::vector<std::size_t> count(k + 1, 0);
    for (std::size_t j = 0; j < m; ++j) ++count[static_cast<std::size_t>(Sum(q.column(j)).get_d())];
    for (std::size_t l = 0; l <= k; ++l) {
      EXPECT_EQ(Rational(static_cast<unsigned long>(count[l])),
                w[l] * Rational(static_cast<unsigned long>(m)));
    }
  }
}

JointStateSpec Spec(std::size_t k, std::initializer_list<std::pair<const char*, const char*>> t) {
  std::map<std::string, Rational> table;
  for (const auto& [label, p] : t) table[label] = R(p);
  return JointStateSpec(k, std::move(table));
}

TEST(JointStateSpecTest, Validation) {
  EXPECT_THROW(Spec(2, {{"PN", "1/2"}}), Error);
  EXPECT_THROW(Spec(2, {{"PX", "1"}}), Error);
  EXPECT_THROW(Spec(2, {{"PPN", "1"}}), Error);
  EXPECT_THROW(Spec(2, {{"PP", "3/2"}, {"NN", "-1/2"}}), Error);
  EXPECT_NO_THROW(Spec(2, {{"PP", "1"}}));
}

TEST(AlternatingTest, WorkedExamples) {
  EXPECT_EQ(AlternatingToParallel(Spec(2, {{"PP", "1"}}), 2),
            Matrix({{"1", "1"}, {"1", "1"}}));
  EXPECT_EQ(AlternatingToParallel(Spec(2, {{"PN", "1/2"}, {"NP", "1/2"}}), 2),
            FromColumns({Rs({"0", "1"}), Rs({"1", "0"})}));

  const auto uniform = Spec(2, {{"PP", "1/4"}, {"PN", "1/4"}, {"NP", "1/4"}, {"NN", "1/4"}});
  const auto q = AlternatingToParallel(uniform, 4);
  EXPECT_EQ(q, FromColumns({Rs({"1", "1"}), Rs({"0", "1"}), Rs({"1", "0"}), Rs({"0", "0"})}));
  EXPECT_EQ(ComputeAverageQualities(q).values, Rs({"1/2", "1/2"}));
  EXPECT_EQ(MarginalProbabilities(uniform), Rs({"1/2", "1/2"}));
}

TEST(AlternatingTest, NonRealizable) {
  try {
    AlternatingToParallel(Spec(2, {{"PN", "1/3"}, {"NP", "2/3"}}), 2);
    FAIL() << "expected NonRealizable";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonRealizable);
  }
  EXPECT_EQ(MinimalRealizableSubchannels(Spec(2, {{"PN", "1/3"}, {"NP", "2/3"}})), 3u);
}

TEST(MarginalTest, WorkedExamples) {
  const auto spec = Spec(2, {{"PP", "1/8"}, {"PN", "3/8"}, {"NP", "1/4"}, {"NN", "1/4"}});
  EXPECT_EQ(MarginalProbabilities(spec)[0], R("1/8") + R("3/8"));
  EXPECT_EQ(MarginalProbabilities(Spec(3, {{"NNN", "1"}})), Rs({"0", "0", "0"}));

  // Uniform over all 2^K states: every marginal is 1/2.
  for (std::size_t k = 1; k <= 5; ++k) {
    std::map<std::string, Rational> table;
    for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
      std::string label;
      for (std::size_t u = 0; u < k; ++u) label += ((s >> u) & 1) ? 'P' : 'N';
      table[label] = Rational(1, static_cast<unsigned long>(1UL << k));
    }
    const JointStateSpec spec(k, table);
    EXPECT_EQ(MarginalProbabilities(spec), RationalVector(k, Rational(1, 2)));
  }
}

}  // namespace
}  // namespace dofkit
