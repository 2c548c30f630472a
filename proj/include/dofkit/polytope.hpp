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

#include "dofkit/rational.hpp"

namespace dofkit {

// Vertex enumeration and hulls are exact; beyond this dimension the
// combinatorics stop being desk-scale.
inline constexpr std::size_t kMaxPolytopeDimension = 6;

// normal . x <= rhs
struct Halfspace {
  RationalVector normal;
  Rational rhs;

  bool Satisfied(std::span<const Rational> point) const;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

// Bounded convex polytope with an exact H-representation and, optionally,
// its vertex list. Value type; all geometry lives in the free functions below.
class Polytope {
 public:
  // Throws kDimensionMismatch if a halfspace or vertex has the wrong length,
  // and kInvalidArgument if a listed vertex violates a halfspace.
  Polytope(std::size_t dimension, std::vector<Halfspace> halfspaces,
           std::optional<std::vector<RationalVector>> vertices = std::nullopt);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::optional<std::vector<RationalVector>>& vertices() const {
    return vertices_;
  }

  // H-representation membership.
  bool Contains(std::span<const Rational> point) const;

 private:
  std::size_t dimension_;
  std::vector<Halfspace> halfspaces_;
  std::optional<std::vector<RationalVector>> vertices_;
};

// Exact vertex set from the H-representation, deduplicated and sorted
// lexicographically. Throws kDimensionTooLarge above kMaxPolytopeDimension
// and kUnboundedPolytope when the halfspaces do not bound a polytope.
std::vector<RationalVector> EnumerateVertices(const Polytope& p);

// Returns `p` with its vertex list filled in (no-op if already present).
Polytope WithVertices(Polytope p);

// Convex hull of a full-dimensional point set: facet halfspaces (scaled so
// the largest |coefficient| is one, sorted) plus the vertex subset of
// `points`. Throws kDegeneratePointSet if the points lie in a hyperplane.
Polytope ConvexHull(std::span<const RationalVector> points);

// scale * (parts[0] + ... + parts[n-1]). Candidate vertices are all sums of
// one vertex per part; redundant ones are pruned after every addition.
// Throws kDimensionMismatch, kDimensionTooLarge, or kInvalidArgument for an
// empty part list or a nonpositive scale.
Polytope MinkowskiSumScaled(std::span<const Polytope> parts,
                            const Rational& scale);

// True iff every vertex of `inner` satisfies every halfspace of `outer`.
bool PolytopeContains(const Polytope& outer, const Polytope& inner);

bool PolytopeEqual(const Polytope& a, const Polytope& b);

// max objective . x over the polytope (attained at a vertex).
Rational MaximizeLinear(const Polytope& p, std::span<const Rational> objective);

}  // namespace dofkit
