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

#include "dofkit/rational.hpp"

#include <cctype>
#include <string>

#include "dofkit/error.hpp"

namespace dofkit {
namespace {

[[noreturn]] void Malformed(std::string_view text) {
  throw Error(ErrorCode::kInvalidArgument,
              "malformed rational '" + std::string(text) + "'");
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class TenPower(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

Rational ParseDecimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    body = body.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!AllDigits(exp_text) || exp_text.size() > 6) Malformed(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) Malformed(text);
  if (!int_part.empty() && !AllDigits(int_part)) Malformed(text);
  if (!frac_part.empty() && !AllDigits(frac_part)) Malformed(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numerator(digits.empty() ? "0" : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  Rational out;
  if (exponent >= 0) {
    out = Rational(numerator * TenPower(static_cast<unsigned long>(exponent)));
  } else {
    out = Rational(numerator, TenPower(static_cast<unsigned long>(-exponent)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) Malformed(text);

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ParseDecimal(text);

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!AllDigits(num_digits) || !AllDigits(den)) Malformed(text);

  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "zero denominator in '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num_digits), 10);
  if (num.front() == '-') n = -n;
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string ToString(const Rational& value) {
  Rational copy = value;
  copy.canonicalize();
  return copy.get_str();
}

std::vector<std::string> ToStrings(std::span<const Rational> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

Rational Sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

mpz_class DenominatorLcm(std::span<const Rational> values) {
  mpz_class out = 1;
  for (const auto& v : values) {
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den_mpz_t());
  }
  return out;
}

bool IsInteger(const Rational& value) { return value.get_den() == 1; }

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonRealizable: return "NonRealizable";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kRangeError: return "RangeError";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::kDegeneratePointSet: return "DegeneratePointSet";
    case ErrorCode::kSingularEstimate: return "SingularEstimate";
    case ErrorCode::kInsufficientPoints: return "InsufficientPoints";
  }
  return "Unknown";
}

}  // namespace dofkit
