// Copyright 2026 The hermseq Authors
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

#include "hermseq/bounds.hpp"

#include <limits>
#include <string>

#include "hermseq/finite_field.hpp"

namespace hermseq {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw BoundError(what);
}

void check_q(std::int64_t q) {
  require(q >= 2 && prime_power(static_cast<std::uint64_t>(q)).has_value(),
          "q = " + std::to_string(q) + " is not a prime power");
}

void check_new(const BoundParams& p) {
  check_q(p.q);
  require(p.n >= 1 && p.n <= p.q * (p.q * p.q - 2), "n must satisfy 1 <= n <= q(q^2-2)");
  require(p.k >= 1 && p.k <= p.q * p.q - 2, "k must satisfy 1 <= k <= q^2-2");
  require(p.ell >= 2 && p.ell <= p.q, "ell must satisfy 2 <= ell <= q");
}

void check_prior(const BoundParams& p, RangePolicy policy) {
  check_q(p.q);
  require(p.k >= 1 && p.k <= p.q * p.q - 1, "k must satisfy 1 <= k <= q^2-1");
  require(p.n >= 1, "n must be at least 1");
  if (policy == RangePolicy::kFaithful) {
    require(p.n <= (p.q - 1) * (p.q * p.q - 1),
            "n exceeds (q-1)(q^2-1); use the formula-level policy for comparisons");
  }
}

BoundValue ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::logic_error("bound denominator must be positive");
  return BoundValue{Rational(num, den)};
}

BoundParams at_q(std::int64_t q, std::int64_t k, std::int64_t n) { return BoundParams{n, q, k, q}; }

}  // namespace

std::int64_t BoundValue::ceiling() const {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

std::string BoundValue::decimal(int digits) const { return to_decimal(value, digits); }

std::string to_decimal(const Rational& r, int digits) {
  const bool negative = r < 0;
  const std::int64_t num = negative ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  if (num > std::numeric_limits<std::int64_t>::max() / scale) {
    throw std::overflow_error("to_decimal: value too large for the requested precision");
  }
  const std::int64_t scaled = num * scale;
  std::int64_t quot = scaled / den;
  if (2 * (scaled % den) >= den) ++quot;
  const std::int64_t whole = quot / scale;
  const std::int64_t frac = quot % scale;
  std::string out = (negative && quot != 0) ? "-" : "";
  out += std::to_string(whole);
  if (digits > 0) {
    std::string f = std::to_string(frac);
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

BoundValue bound_n_new(const BoundParams& p) {
  check_new(p);
  const std::int64_t r = p.r2();
  return ratio(r * (p.q * p.q - 2) - (p.ell - 1), r + p.k * p.q * (p.q + 1 - p.ell));
}

BoundValue bound_l_new(const BoundParams& p) {
  check_new(p);
  const std::int64_t r = p.r2();
  const std::int64_t pole_at_infinity = (p.q - p.ell) * (p.q + 1) + 1;
  return ratio(r * (p.q * p.q - 2) - (p.ell - 1) - p.k * pole_at_infinity, r + p.k * (p.ell - 1));
}

BoundValue bound_n_nx(const BoundParams& p, RangePolicy policy) {
  check_prior(p, policy);
  const std::int64_t r = p.r1();
  return ratio(r * (p.q * p.q - 1) - 1, r + p.q * (p.q - 1) * p.k);
}

BoundValue bound_l_nx(const BoundParams& p, RangePolicy policy) {
  check_prior(p, policy);
  const std::int64_t r = p.r1();
  return ratio(r * (p.q * p.q - 1) - (p.q * p.q - p.q - 1) * p.k - 1, r + p.k);
}

BoundValue bound_n_gor(const BoundParams& p, RangePolicy policy) {
  check_prior(p, policy);
  const std::int64_t r = p.r1();
  return ratio(r * (p.q * p.q - 1) - (p.q - 1), r + 2 * p.k * (p.q - 1));
}

BoundValue bound_l_gor(const BoundParams& p, RangePolicy policy) {
  check_prior(p, policy);
  const std::int64_t r = p.r1();
  return ratio(r * (p.q * p.q - 1) - (p.k + 1) * (p.q - 1), r + p.k * (p.q - 1));
}

std::vector<ComparisonRow> comparison_sweep(std::int64_t q, std::int64_t k, std::int64_t ell,
                                            std::int64_t n_first, std::int64_t n_last,
                                            std::int64_t stride, bool allow_general_ell) {
  require(n_first <= n_last, "empty n range");
  require(stride >= 1, "stride must be positive");
  require(ell == q || allow_general_ell, "comparison quantities are defined at ell = q");
  std::vector<ComparisonRow> rows;
  auto emit = [&](std::int64_t n) {
    const BoundParams p{n, q, k, ell};
    rows.push_back(ComparisonRow{n, bound_n_new(p), bound_n_gor(p, RangePolicy::kFormulaLevel),
                                 bound_l_new(p), bound_l_gor(p, RangePolicy::kFormulaLevel)});
  };
  std::int64_t n = n_first;
  for (; n <= n_last; n += stride) emit(n);
  if (rows.back().n != n_last) emit(n_last);
  return rows;
}

bool remark1_holds(std::int64_t q, std::int64_t k, std::int64_t n) {
  const BoundParams p = at_q(q, k, n);
  return bound_n_new(p).value > bound_n_gor(p, RangePolicy::kFormulaLevel).value;
}

bool remark2_holds(std::int64_t q, std::int64_t k, std::int64_t n) {
  const BoundParams p = at_q(q, k, n);
  return bound_l_new(p).value > bound_l_gor(p, RangePolicy::kFormulaLevel).value;
}

bool remark2_claimed(std::int64_t q, std::int64_t k, std::int64_t n) {
  const BoundParams p = at_q(q, k, n);
  const bool lambda_one = p.r2() == p.r1() + 1;
  if (q >= 5) return k >= 2;
  if (q == 3) return lambda_one || k >= 4;
  if (q == 4) return lambda_one || k >= 3;
  return false;
}

std::int64_t remark3_polynomial(std::int64_t q, std::int64_t k, std::int64_t n) {
  const BoundParams p = at_q(q, k, n);
  const std::int64_t r1 = p.r1();
  const std::int64_t r2 = p.r2();
  return (q * q * q - 2 * q * q) * k * k +
         (r2 * (2 * q * q - q - 3) - r1 * (q * q * q - q * q - q + 2)) * k + r2 - r1 * (q - 1) - r1 * r2;
}

bool remark3_condition(std::int64_t q, std::int64_t k, std::int64_t n) {
  return remark3_polynomial(q, k, n) > 0;
}

bool remark3_holds(std::int64_t q, std::int64_t k, std::int64_t n) {
  const BoundParams p = at_q(q, k, n);
  const bool improves = bound_l_new(p).value > bound_l_nx(p, RangePolicy::kFormulaLevel).value;
  return remark3_condition(q, k, n) == improves;
}

}  // namespace hermseq
