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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermseq/finite_field.hpp"
#include "hermseq/linear_solver.hpp"

namespace hermseq {

// Degree restriction on the feedback polynomial: each variable of degree at
// most k (the N^(k) measure) or total degree at most k (the L^(k) measure).
class DegreeMode {
 public:
  enum class Kind { kPerVariable, kTotalDegree };

  static DegreeMode per_variable(int k) { return DegreeMode(Kind::kPerVariable, k); }
  static DegreeMode total_degree(int k) { return DegreeMode(Kind::kTotalDegree, k); }

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  bool per_variable() const { return kind_ == Kind::kPerVariable; }
  // "per-variable" or "total-degree".
  std::string name() const;

  friend bool operator==(const DegreeMode&, const DegreeMode&) = default;

 private:
  DegreeMode(Kind kind, int k);
  Kind kind_;
  int k_;
};

// Exact value, or [lo, hi] when the monomial budget cut the search short.
struct ComplexityResult {
  bool exact = true;
  int lo = 0;
  int hi = 0;

  static ComplexityResult exact_value(int m) { return {true, m, m}; }
  static ComplexityResult bracket(int lo, int hi) { return {lo == hi, lo, hi}; }
  int value() const {
    if (!exact) throw std::logic_error("complexity result is a bracket, not an exact value");
    return lo;
  }
};

inline constexpr std::uint64_t kDefaultMonomialBudget = std::uint64_t{1} << 22;

enum class RecurrenceCheck { kFeasible, kInfeasible, kUnknown };

// A polynomial recurrence found by the solver: coefficients keyed by exponent
// vector (one exponent per window position, oldest first).
struct Recurrence {
  int m = 0;
  std::vector<std::pair<std::vector<std::uint32_t>, FieldElement>> terms;

  FieldElement evaluate(std::span<const FieldElement> window, const FieldCtx& ctx) const;
};

// Number of admissible monomials in m variables after capping each exponent
// at q^2 - 1 (x^(q^2) = x on F_{q^2}). Saturates at UINT64_MAX.
std::uint64_t monomial_count(int m, const DegreeMode& mode, const FieldCtx& ctx);

// Budgeted existence check behind exists_recurrence. Streams at most `budget`
// monomial columns; kUnknown when the budget runs out before a decision.
RecurrenceCheck check_recurrence(std::span<const FieldElement> t, int m, const DegreeMode& mode,
                                 const FieldCtx& ctx, std::uint64_t budget,
                                 Recurrence* witness = nullptr);

// True iff t_{i+m} = f(t_i, ..., t_{i+m-1}) for 1 <= i <= n-m with f of the
// given degree mode. Requires 1 <= m <= n-1. Unbudgeted.
bool exists_recurrence(std::span<const FieldElement> t, int m, const DegreeMode& mode,
                       const FieldCtx& ctx);

// N^(k) or L^(k) depending on mode. 0 for the all-zero sequence, 1 for a
// single nonzero term, otherwise the least feasible m >= 1.
ComplexityResult nonlinear_complexity(std::span<const FieldElement> t, const DegreeMode& mode,
                                      const FieldCtx& ctx,
                                      std::uint64_t budget = kDefaultMonomialBudget);

// Exhaustive search over every coefficient assignment; independent of the
// linear-algebra route. Throws std::length_error beyond 2^24 candidates.
bool brute_force_oracle(std::span<const FieldElement> t, int m, const DegreeMode& mode,
                        const FieldCtx& ctx);

// Berlekamp-Massey.
int linear_complexity(std::span<const FieldElement> t, const FieldCtx& ctx);

}  // namespace hermseq
