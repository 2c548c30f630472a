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

#include "dofkit/dof_region.hpp"

#include <string>

#include "dofkit/dof_bounds.hpp"
#include "dofkit/error.hpp"

namespace dofkit {
namespace {

constexpr std::size_t kMaxUsers = kMaxPolytopeDimension;

void CheckUsers(std::size_t num_users) {
  if (num_users == 0) {
    throw Error(ErrorCode::kInvalidArgument, "users must be ≥ 1");
  }
  if (num_users > kMaxUsers) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "region computations support at most " + std::to_string(kMaxUsers) +
                    " users, got " + std::to_string(num_users));
  }
}

bool Contains(UserSet set, std::size_t user) { return (set >> user) & 1U; }

}  // namespace

Rational RegionRankFunction(const RationalVector& alpha, UserSet subset) {
  if (subset == 0) return 0;
  RationalVector selected;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (Contains(subset, k)) selected.push_back(alpha[k]);
  }
  return SubsetSumDof(selected);
}

Polytope SingleSubchannelRegion(const RationalVector& alpha) {
  const std::size_t k_users = alpha.size();
  CheckUsers(k_users);
  for (const auto& a : alpha) {
    if (a < 0 || a > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "CSIT quality " + ToString(a) + " is outside [0, 1]");
    }
  }

  std::vector<Halfspace> halfspaces;
  halfspaces.reserve(k_users + (std::size_t{1} << k_users) - 1);
  for (std::size_t k = 0; k < k_users; ++k) {
    RationalVector normal(k_users, Rational(0));
    normal[k] = -1;
    halfspaces.push_back({std::move(normal), Rational(0)});
  }
  const UserSet full = (UserSet{1} << k_users) - 1;
  for (UserSet s = 1; s <= full; ++s) {
    RationalVector normal(k_users, Rational(0));
    for (std::size_t k = 0; k < k_users; ++k) {
      if (Contains(s, k)) normal[k] = 1;
    }
    halfspaces.push_back({std::move(normal), RegionRankFunction(alpha, s)});
  }
  return Polytope(k_users, std::move(halfspaces));
}

Polytope OuterRegion(const QualityMatrix& q) {
  return SingleSubchannelRegion(ComputeAverageQualities(q).values);
}

PolymatroidCheck CheckPolymatroid(const RationalVector& alpha) {
  const std::size_t k_users = alpha.size();
  if (k_users > 16) {
    throw Error(ErrorCode::kDimensionTooLarge, "polymatroid check limited to 16 users");
  }
  const UserSet full = (UserSet{1} << k_users) - 1;
  std::vector<Rational> f(static_cast<std::size_t>(full) + 1);
  for (UserSet s = 0; s <= full; ++s) f[s] = RegionRankFunction(alpha, s);

  for (UserSet s = 0; s <= full; ++s) {
    for (std::size_t k = 0; k < k_users; ++k) {
      const UserSet grown = s | (UserSet{1} << k);
      if (f[s] > f[grown]) return {false, std::pair{s, grown}};
    }
  }
  for (UserSet s = 0; s <= full; ++s) {
    for (UserSet t = s + 1; t <= full; ++t) {
      if (f[s | t] + f[s & t] > f[s] + f[t]) return {false, std::pair{s, t}};
    }
  }
  return {};
}

RegionReport ComputeRegionReport(const QualityMatrix& q) {
  CheckUsers(q.num_users());
  std::vector<Polytope> parts;
  parts.reserve(q.num_subchannels());
  for (std::size_t m = 0; m < q.num_subchannels(); ++m) {
    parts.push_back(WithVertices(SingleSubchannelRegion(q.column(m))));
  }
  const Rational scale(1, static_cast<unsigned long>(q.num_subchannels()));
  Polytope inner = MinkowskiSumScaled(parts, scale);
  Polytope outer = WithVertices(OuterRegion(q));

  const RationalVector ones(q.num_users(), Rational(1));
  const Rational inner_max = MaximizeLinear(inner, ones);
  const Rational outer_max = MaximizeLinear(outer, ones);
  const bool equal = PolytopeEqual(inner, outer);
  return {std::move(outer), std::move(inner), equal, inner_max, outer_max};
}

}  // namespace dofkit
