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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dofkit {

// Exact rational arithmetic. Every CSIT quality, DoF value and polytope
// coordinate in the library is carried as a GMP rational.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts integers ("2"), fractions ("3/4", "-1/3") and plain decimals
// ("0.75", "-.5", "1e-2"). Decimals are converted exactly, so "0.1" is 1/10.
// Throws Error(kInvalidArgument) on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string ToString(const Rational& value);

std::vector<std::string> ToStrings(std::span<const Rational> values);

Rational Sum(std::span<const Rational> values);

// Least common multiple of the denominators (1 for an empty span).
mpz_class DenominatorLcm(std::span<const Rational> values);

bool IsInteger(const Rational& value);

}  // namespace dofkit
