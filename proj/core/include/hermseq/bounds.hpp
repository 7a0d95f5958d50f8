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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hermseq {

using Rational = boost::rational<std::int64_t>;

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of one bound evaluation. r1 = floor(n / (q^2-1)) and
// r2 = floor(n / (q^2-2)) follow from n and q.
struct BoundParams {
  std::int64_t n = 0;
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::int64_t ell = 0;

  std::int64_t r1() const { return n / (q * q - 1); }
  std::int64_t r2() const { return n / (q * q - 2); }
};

struct BoundValue {
  Rational value;

  std::int64_t ceiling() const;
  // A value <= 0 carries no information about a complexity.
  bool trivial() const { return value <= 0; }
  std::string decimal(int digits = 6) const;
};

// How strictly the prior-work formulas police n. kFaithful requires
// n <= (q-1)(q^2-1), the length of the sequence those bounds were proved for;
// kFormulaLevel accepts any n >= 1 for side-by-side comparison.
enum class RangePolicy { kFaithful, kFormulaLevel };

// Lower bound on N^(k)(s_n) for the collinear-places sequence.
// Requires 1 <= n <= q(q^2-2), 1 <= k <= q^2-2, 2 <= ell <= q.
BoundValue bound_n_new(const BoundParams& p);
// Lower bound on L^(k)(s_n), same ranges.
BoundValue bound_l_new(const BoundParams& p);

// Prior bounds for the length (q-1)(q^2-1) sequence; 1 <= k <= q^2-1, ell ignored.
BoundValue bound_n_nx(const BoundParams& p, RangePolicy policy = RangePolicy::kFaithful);
BoundValue bound_l_nx(const BoundParams& p, RangePolicy policy = RangePolicy::kFaithful);
BoundValue bound_n_gor(const BoundParams& p, RangePolicy policy = RangePolicy::kFaithful);
BoundValue bound_l_gor(const BoundParams& p, RangePolicy policy = RangePolicy::kFaithful);

// Exact decimal rendering, rounded half away from zero.
std::string to_decimal(const Rational& r, int digits = 6);

struct ComparisonRow {
  std::int64_t n = 0;
  BoundValue n1;  // new N bound
  BoundValue n2;  // GOR N bound
  BoundValue l1;  // new L bound
  BoundValue l2;  // GOR L bound
};

// One row per n in [n_first, n_last] stepping by `stride`; the last n is always
// included. ell must equal q unless `allow_general_ell` is set.
std::vector<ComparisonRow> comparison_sweep(std::int64_t q, std::int64_t k, std::int64_t ell,
                                            std::int64_t n_first, std::int64_t n_last,
                                            std::int64_t stride = 1,
                                            bool allow_general_ell = false);

// N1(n) > N2(n) at ell = q.
bool remark1_holds(std::int64_t q, std::int64_t k, std::int64_t n);
// L1(n) > L2(n) at ell = q.
bool remark2_holds(std::int64_t q, std::int64_t k, std::int64_t n);
// Whether (q, k, n) lies in the parameter set on which L1 > L2 is asserted:
// q >= 5 with k >= 2; q = 3 with k >= 4 (r2 = r1) or any k (r2 = r1 + 1);
// q = 4 with k >= 3 (r2 = r1) or any k (r2 = r1 + 1).
bool remark2_claimed(std::int64_t q, std::int64_t k, std::int64_t n);

// (q^3 - 2q^2) k^2 + (r2 (2q^2 - q - 3) - r1 (q^3 - q^2 - q + 2)) k
//   + r2 - r1 (q-1) - r1 r2, evaluated exactly.
std::int64_t remark3_polynomial(std::int64_t q, std::int64_t k, std::int64_t n);
bool remark3_condition(std::int64_t q, std::int64_t k, std::int64_t n);
// The condition agrees with L1 > L_nx (formula level) at this point.
bool remark3_holds(std::int64_t q, std::int64_t k, std::int64_t n);

}  // namespace hermseq
