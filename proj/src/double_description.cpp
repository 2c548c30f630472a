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

#include "double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

namespace dofkit::detail {
namespace {

// Set of row indices at which a ray is tight.
class RowSet {
 public:
  explicit RowSet(std::size_t size) : words_((size + 63) / 64, 0) {}

  void Insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  std::size_t Count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool SubsetOf(const RowSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  static RowSet Intersect(const RowSet& a, const RowSet& b) {
    RowSet out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
    return out;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RationalVector y;
  RowSet tight;
};

// Scale to the primitive integer vector on the same ray.
void MakePrimitive(RationalVector& y) {
  mpz_class lcm = 1;
  for (const auto& v : y) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  mpz_class gcd = 0;
  for (auto& v : y) {
    v *= lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_num_mpz_t());
  }
  if (gcd == 0 || gcd == 1) return;
  for (auto& v : y) v /= gcd;
}

// Inverse of a square nonsingular matrix by Gauss-Jordan elimination.
std::vector<RationalVector> Invert(std::vector<RationalVector> a) {
  const std::size_t n = a.size();
  std::vector<RationalVector> inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Greedy choice of n linearly independent rows, in input order.
std::vector<std::size_t> IndependentRows(std::span<const RationalVector> rows,
                                         std::size_t n) {
  std::vector<RationalVector> echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < n; ++i) {
    RationalVector v = rows[i];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      if (v[pivots[e]] == 0) continue;
      const Rational f = v[pivots[e]];
      for (std::size_t j = 0; j < n; ++j) v[j] -= f * echelon[e][j];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (nz == v.end()) continue;
    const std::size_t p = static_cast<std::size_t>(nz - v.begin());
    const Rational lead = v[p];
    for (auto& x : v) x /= lead;
    echelon.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

std::size_t LinearRank(std::vector<RationalVector> vectors, std::size_t n) {
  return IndependentRows(vectors, n).size();
}

ConeRays ExtremeRays(std::span<const RationalVector> rows, std::size_t n) {
  const std::vector<std::size_t> basis = IndependentRows(rows, n);
  if (basis.size() < n) return {};

  std::vector<RationalVector> basis_rows;
  for (std::size_t i : basis) basis_rows.push_back(rows[i]);
  const auto inverse = Invert(std::move(basis_rows));

  // Columns of -B^{-1} span the simplicial cone { B y <= 0 }.
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    Ray ray{RationalVector(n), RowSet(rows.size())};
    for (std::size_t i = 0; i < n; ++i) ray.y[i] = -inverse[i][j];
    MakePrimitive(ray.y);
    for (std::size_t b = 0; b < n; ++b) {
      if (b != j) ray.tight.Insert(basis[b]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(rows.size(), false);
  for (std::size_t i : basis) in_basis[i] = true;

  for (std::size_t row = 0; row < rows.size(); ++row) {
    if (in_basis[row]) continue;

    std::vector<Rational> slack(rays.size());
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      slack[r] = Dot(rows[row], rays[r].y);
      if (slack[r] > 0) positive.push_back(r);
      if (slack[r] < 0) negative.push_back(r);
    }
    if (positive.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (slack[r] == 0) rays[r].tight.Insert(row);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : positive) {
      for (std::size_t q : negative) {
        RowSet common = RowSet::Intersect(rays[p].tight, rays[q].tight);
        if (common.Count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.SubsetOf(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{RationalVector(n), std::move(common)};
        for (std::size_t i = 0; i < n; ++i) {
          fresh.y[i] = slack[p] * rays[q].y[i] - slack[q] * rays[p].y[i];
        }
        MakePrimitive(fresh.y);
        fresh.tight.Insert(row);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (slack[r] > 0) continue;
      if (slack[r] == 0) rays[r].tight.Insert(row);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  ConeRays out;
  out.pointed = true;
  out.rays.reserve(rays.size());
  for (auto& ray : rays) out.rays.push_back(std::move(ray.y));
  return out;
}

}  // namespace dofkit::detail
