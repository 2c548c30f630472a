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
#include <span>
#include <vector>

#include "dofkit/rational.hpp"

namespace dofkit::detail {

struct ConeRays {
  bool pointed = false;
  std::vector<RationalVector> rays;  // primitive integer vectors
};

// Extreme rays of the cone { y in R^n : row . y <= 0 for every row } by the
// double description method with the combinatorial adjacency test. Returns
// pointed = false (and no rays) when the cone contains a line.
ConeRays ExtremeRays(std::span<const RationalVector> rows, std::size_t n);

// Dimension of the linear span of `vectors` (each of length n).
std::size_t LinearRank(std::vector<RationalVector> vectors, std::size_t n);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace dofkit::detail
