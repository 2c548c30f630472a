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
#include <utility>

#include "dofkit/csit_model.hpp"
#include "dofkit/polytope.hpp"
#include "dofkit/rational.hpp"

namespace dofkit {

// DoF region of a stand-alone subchannel with qualities `alpha`:
//   { d >= 0 : sum_{k in S} d_k <= 1 + sum_{k in S} alpha_k - max_{k in S} alpha_k }
// for every nonempty user subset S. Halfspaces are ordered: the K
// nonnegativity rows, then subsets by ascending bitmask.
Polytope SingleSubchannelRegion(const RationalVector& alpha);

// Same inequality family evaluated on the average qualities of `q`.
Polytope OuterRegion(const QualityMatrix& q);

// Subsets of users are bitmasks: bit k set means user k is in the subset.
using UserSet = std::uint32_t;

struct PolymatroidCheck {
  bool is_polymatroid = true;
  // On failure, (S, T) with f(S u T) + f(S n T) > f(S) + f(T), or with
  // S a subset of T and f(S) > f(T).
  std::optional<std::pair<UserSet, UserSet>> witness;
};

// Rank function of the single-subchannel region, f(empty) = 0.
Rational RegionRankFunction(const RationalVector& alpha, UserSet subset);

// Exhaustive check that the rank function is nondecreasing and submodular.
PolymatroidCheck CheckPolymatroid(const RationalVector& alpha);

struct RegionReport {
  Polytope outer;
  Polytope inner;
  bool equal = false;
  Rational inner_max_sum;
  Rational outer_max_sum;
};

// Inner bound (1/M)(D^[1] + ... + D^[M]) against the outer bound built from
// average qualities. Throws kDimensionTooLarge for K > 6.
RegionReport ComputeRegionReport(const QualityMatrix& q);

}  // namespace dofkit
