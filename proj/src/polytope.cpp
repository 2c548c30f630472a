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

#include "dofkit/polytope.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "double_description.hpp"
#include "dofkit/error.hpp"

namespace dofkit {
namespace {

void CheckDimension(std::size_t dimension) {
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "polytope dimension must be ≥ 1");
  }
  if (dimension > kMaxPolytopeDimension) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "dimension " + std::to_string(dimension) + " exceeds limit of " +
                    std::to_string(kMaxPolytopeDimension));
  }
}

void SortUnique(std::vector<RationalVector>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

// Scale so the largest |coefficient| of the normal is one.
Halfspace Normalized(RationalVector normal, Rational rhs) {
  Rational scale = 0;
  for (const auto& c : normal) scale = std::max(scale, Rational(abs(c)));
  if (scale != 0 && scale != 1) {
    for (auto& c : normal) c /= scale;
    rhs /= scale;
  }
  return {std::move(normal), std::move(rhs)};
}

std::size_t AffineRank(std::span<const RationalVector> points, std::size_t dimension) {
  if (points.empty()) return 0;
  std::vector<RationalVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(dimension);
    for (std::size_t j = 0; j < dimension; ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return detail::LinearRank(std::move(diffs), dimension);
}

std::vector<RationalVector> VertexList(const Polytope& p) {
  return p.vertices() ? *p.vertices() : EnumerateVertices(p);
}

}  // namespace

bool Halfspace::Satisfied(std::span<const Rational> point) const {
  return detail::Dot(normal, point) <= rhs;
}

Polytope::Polytope(std::size_t dimension, std::vector<Halfspace> halfspaces,
                   std::optional<std::vector<RationalVector>> vertices)
    : dimension_(dimension),
      halfspaces_(std::move(halfspaces)),
      vertices_(std::move(vertices)) {
  for (const auto& h : halfspaces_) {
    if (h.normal.size() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "halfspace of length " + std::to_string(h.normal.size()) +
                      " in dimension " + std::to_string(dimension_));
    }
  }
  if (!vertices_) return;
  for (const auto& v : *vertices_) {
    if (v.size() != dimension_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vertex of length " + std::to_string(v.size()) +
                      " in dimension " + std::to_string(dimension_));
    }
    if (!Contains(v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "listed vertex violates the H-representation");
    }
  }
}

bool Polytope::Contains(std::span<const Rational> point) const {
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return h.Satisfied(point); });
}

std::vector<RationalVector> EnumerateVertices(const Polytope& p) {
  const std::size_t d = p.dimension();
  CheckDimension(d);

  // Homogenize: x in P  <=>  (x, 1) in { (x, t) : a.x - b t <= 0, -t <= 0 }.
  std::vector<RationalVector> rows;
  rows.reserve(p.halfspaces().size() + 1);
  for (const auto& h : p.halfspaces()) {
    RationalVector row = h.normal;
    row.push_back(-h.rhs);
    rows.push_back(std::move(row));
  }
  RationalVector t_row(d + 1, Rational(0));
  t_row[d] = -1;
  rows.push_back(std::move(t_row));

  auto cone = detail::ExtremeRays(rows, d + 1);
  if (!cone.pointed) {
    throw Error(ErrorCode::kUnboundedPolytope, "polyhedron contains a line");
  }
  std::vector<RationalVector> out;
  out.reserve(cone.rays.size());
  for (const auto& ray : cone.rays) {
    if (ray[d] == 0) {
      throw Error(ErrorCode::kUnboundedPolytope, "polyhedron has a recession direction");
    }
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = ray[i] / ray[d];
    out.push_back(std::move(v));
  }
  SortUnique(out);
  return out;
}

Polytope WithVertices(Polytope p) {
  if (p.vertices()) return p;
  auto verts = EnumerateVertices(p);
  const std::size_t d = p.dimension();
  return Polytope(d, p.halfspaces(), std::move(verts));
}

Polytope ConvexHull(std::span<const RationalVector> points) {
  if (points.empty()) {
    throw Error(ErrorCode::kDegeneratePointSet, "convex hull of no points");
  }
  const std::size_t d = points.front().size();
  CheckDimension(d);
  std::vector<RationalVector> unique(points.begin(), points.end());
  for (const auto& pt : unique) {
    if (pt.size() != d) throw Error(ErrorCode::kDimensionMismatch, "ragged point set");
  }
  SortUnique(unique);
  if (AffineRank(unique, d) < d) {
    throw Error(ErrorCode::kDegeneratePointSet,
                "points do not affinely span dimension " + std::to_string(d));
  }

  // Facets a.x <= beta are the extreme rays of { (a, beta) : a.v - beta <= 0 }.
  std::vector<RationalVector> rows;
  rows.reserve(unique.size());
  for (const auto& v : unique) {
    RationalVector row = v;
    row.push_back(-1);
    rows.push_back(std::move(row));
  }
  auto cone = detail::ExtremeRays(rows, d + 1);

  std::vector<Halfspace> facets;
  facets.reserve(cone.rays.size());
  for (auto& ray : cone.rays) {
    Rational beta = ray[d];
    ray.pop_back();
    if (std::all_of(ray.begin(), ray.end(), [](const Rational& c) { return c == 0; })) {
      continue;
    }
    facets.push_back(Normalized(std::move(ray), std::move(beta)));
  }
  std::sort(facets.begin(), facets.end(), [](const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
  });

  // A point is a vertex iff the facets tight at it pin it down.
  std::vector<RationalVector> verts;
  for (const auto& v : unique) {
    std::vector<RationalVector> tight;
    for (const auto& f : facets) {
      if (detail::Dot(f.normal, v) == f.rhs) tight.push_back(f.normal);
    }
    if (tight.size() >= d && detail::LinearRank(std::move(tight), d) == d) {
      verts.push_back(v);
    }
  }
  return Polytope(d, std::move(facets), std::move(verts));
}

Polytope MinkowskiSumScaled(std::span<const Polytope> parts, const Rational& scale) {
  if (parts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Minkowski sum of no parts");
  }
  if (scale <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "Minkowski scale must be positive");
  }
  const std::size_t d = parts.front().dimension();
  CheckDimension(d);
  for (const auto& part : parts) {
    if (part.dimension() != d) {
      throw Error(ErrorCode::kDimensionMismatch, "Minkowski parts differ in dimension");
    }
  }

  std::vector<RationalVector> acc = VertexList(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto next = VertexList(parts[i]);
    std::vector<RationalVector> candidates;
    candidates.reserve(acc.size() * next.size());
    for (const auto& a : acc) {
      for (const auto& b : next) {
        RationalVector s(d);
        for (std::size_t j = 0; j < d; ++j) s[j] = a[j] + b[j];
        candidates.push_back(std::move(s));
      }
    }
    SortUnique(candidates);
    // Prune to hull vertices when possible; lower-dimensional partial sums
    // are carried forward unpruned.
    if (AffineRank(candidates, d) == d) {
      acc = *ConvexHull(candidates).vertices();
    } else {
      acc = std::move(candidates);
    }
  }
  for (auto& v : acc) {
    for (auto& c : v) c *= scale;
  }
  return ConvexHull(acc);
}

bool PolytopeContains(const Polytope& outer, const Polytope& inner) {
  if (outer.dimension() != inner.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "containment test between dimensions " +
                    std::to_string(outer.dimension()) + " and " +
                    std::to_string(inner.dimension()));
  }
  const auto verts = VertexList(inner);
  return std::all_of(verts.begin(), verts.end(),
                     [&](const RationalVector& v) { return outer.Contains(v); });
}

bool PolytopeEqual(const Polytope& a, const Polytope& b) {
  return PolytopeContains(a, b) && PolytopeContains(b, a);
}

Rational MaximizeLinear(const Polytope& p, std::span<const Rational> objective) {
  if (objective.size() != p.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "objective length differs from dimension");
  }
  const auto verts = VertexList(p);
  if (verts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "maximizing over an empty polytope");
  }
  Rational best = detail::Dot(objective, verts.front());
  for (const auto& v : verts) best = std::max(best, detail::Dot(objective, v));
  return best;
}

}  // namespace dofkit
