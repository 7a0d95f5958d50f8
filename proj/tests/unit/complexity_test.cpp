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

#include <gtest/gtest.h>

#include "hermseq/complexity.hpp"
#include "hermseq/sequence_builder.hpp"
#include "test_support.hpp"

namespace hermseq {
namespace {

using testing::Gen;

std::vector<DegreeMode> small_modes() {
  return {DegreeMode::per_variable(1), DegreeMode::per_variable(2), DegreeMode::total_degree(1),
          DegreeMode::total_degree(2)};
}

// Least m whose brute-force check succeeds.
int brute_complexity(std::span<const FieldElement> t, const DegreeMode& mode, const FieldCtx& ctx) {
  if (std::all_of(t.begin(), t.end(), [](FieldElement v) { return v.is_zero(); })) return 0;
  if (t.size() == 1) return 1;
  for (int m = 1; m < static_cast<int>(t.size()); ++m)
    if (brute_force_oracle(t, m, mode, ctx)) return m;
  return static_cast<int>(t.size()) - 1;
}

// Shortest homogeneous linear recurrence by exhaustive search over coefficients.
int brute_linear_complexity(std::span<const FieldElement> t, const FieldCtx& ctx) {
  const std::size_t n = t.size();
  for (std::size_t len = 0; len <= n; ++len) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= ctx.order();
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<FieldElement> c(len);
      std::uint64_t rest = code;
      for (auto& v : c) {
        v = FieldElement{static_cast<std::uint32_t>(rest % ctx.order())};
        rest /= ctx.order();
      }
      bool ok = true;
      for (std::size_t i = len; i < n && ok; ++i) {
        FieldElement acc = ctx.zero();
        for (std::size_t j = 1; j <= len; ++j) acc = ctx.add(acc, ctx.mul(c[j - 1], t[i - j]));
        ok = acc == t[i];
      }
      if (ok) return static_cast<int>(len);
    }
  }
  return static_cast<int>(n);
}

TEST(DegreeModeTest, NamesAndValidation) {
  EXPECT_EQ(DegreeMode::per_variable(3).name(), "per-variable");
  EXPECT_EQ(DegreeMode::total_degree(3).name(), "total-degree");
  EXPECT_THROW(DegreeMode::per_variable(0), std::invalid_argument);
  EXPECT_THROW(DegreeMode::total_degree(-1), std::invalid_argument);
}

TEST(MonomialCountTest, CountsAndCaps) {
  const FieldCtx f4 = FieldCtx::create(2, 1);
  EXPECT_EQ(monomial_count(2, DegreeMode::per_variable(1), f4), 4u);
  EXPECT_EQ(monomial_count(2, DegreeMode::total_degree(2), f4), 6u);
  EXPECT_EQ(monomial_count(2, DegreeMode::per_variable(3), f4), 16u);
  // Exponents cap at q^2 - 1 = 3.
  EXPECT_EQ(monomial_count(2, DegreeMode::per_variable(10), f4), 16u);
  EXPECT_EQ(monomial_count(1, DegreeMode::total_degree(10), f4), 4u);
  EXPECT_EQ(monomial_count(200, DegreeMode::per_variable(3), f4), UINT64_MAX);
}

TEST(ExistsRecurrenceTest, SpecExamples) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  Gen gen(3);
  for (int t = 0; t < 20; ++t) {
    const auto s = gen.sequence(ctx, gen.uniform(2, 7));
    for (const auto& mode : small_modes()) {
      EXPECT_TRUE(exists_recurrence(s, static_cast<int>(s.size()) - 1, mode, ctx));
    }
  }
  std::vector<FieldElement> spike(6, ctx.zero());
  spike.back() = ctx.one();
  for (const auto& mode : small_modes())
    for (int m = 1; m <= 4; ++m) EXPECT_FALSE(exists_recurrence(spike, m, mode, ctx));
  const std::vector<FieldElement> constant(5, ctx.epsilon());
  for (const auto& mode : small_modes()) EXPECT_TRUE(exists_recurrence(constant, 1, mode, ctx));
  EXPECT_THROW(exists_recurrence(constant, 0, DegreeMode::per_variable(1), ctx), std::out_of_range);
  EXPECT_THROW(exists_recurrence(constant, 5, DegreeMode::per_variable(1), ctx), std::out_of_range);
}

TEST(NonlinearComplexityTest, SpecExamples) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  const std::vector<FieldElement> zeros(5, ctx.zero());
  for (const auto& mode : small_modes()) EXPECT_EQ(nonlinear_complexity(zeros, mode, ctx).value(), 0);
  const std::vector<FieldElement> spike{ctx.zero(), ctx.zero(), ctx.zero(), ctx.one()};
  EXPECT_EQ(nonlinear_complexity(spike, DegreeMode::per_variable(1), ctx).value(), 3);
  const std::vector<FieldElement> single{ctx.epsilon()};
  EXPECT_EQ(nonlinear_complexity(single, DegreeMode::total_degree(1), ctx).value(), 1);
  EXPECT_TRUE(nonlinear_complexity(std::span<const FieldElement>{}, DegreeMode::per_variable(1), ctx).exact);
}

TEST(NonlinearComplexityTest, F4ConstructedSequenceAgainstOracle) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  const auto s = build_sequence(ctx, ctx.epsilon(), 2);
  for (const auto& mode : small_modes()) {
    for (std::size_t n = 1; n <= s.size(); ++n) {
      const auto view = s.view().first(n);
      EXPECT_EQ(nonlinear_complexity(view, mode, ctx).value(), brute_complexity(view, mode, ctx));
    }
  }
}

TEST(NonlinearComplexityTest, WitnessReproducesTheSequence) {
  const FieldCtx ctx = FieldCtx::create(3, 1);
  const auto s = build_sequence(ctx, ctx.epsilon(), 3);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& mode : {DegreeMode::per_variable(k), DegreeMode::total_degree(k)}) {
      const int m = nonlinear_complexity(s.view(), mode, ctx).value();
      Recurrence rec;
      ASSERT_EQ(check_recurrence(s.view(), m, mode, ctx, kDefaultMonomialBudget, &rec), RecurrenceCheck::kFeasible);
      ASSERT_EQ(rec.m, m);
      for (const auto& [exps, coeff] : rec.terms) {
        ASSERT_EQ(exps.size(), static_cast<std::size_t>(m));
        std::uint32_t total = 0;
        for (auto x : exps) {
          total += x;
          if (mode.per_variable()) ASSERT_LE(x, static_cast<std::uint32_t>(k));
        }
        if (!mode.per_variable()) ASSERT_LE(total, static_cast<std::uint32_t>(k));
        ASSERT_FALSE(coeff.is_zero());
      }
      for (std::size_t i = 0; i + m < s.size(); ++i) {
        ASSERT_EQ(rec.evaluate(s.view().subspan(i, m), ctx), s.terms[i + m]);
      }
      if (m > 1) EXPECT_FALSE(exists_recurrence(s.view(), m - 1, mode, ctx));
    }
  }
}

TEST(NonlinearComplexityTest, BudgetYieldsABracketAroundTheExactValue) {
  const FieldCtx ctx = FieldCtx::create(3, 1);
  const auto s = build_sequence(ctx, ctx.epsilon(), 2);
  for (int k : {2, 5, 7}) {
    const auto mode = DegreeMode::per_variable(k);
    const int exact = nonlinear_complexity(s.view(), mode, ctx).value();
    for (std::uint64_t budget : {1u, 8u, 40u}) {
      const auto r = nonlinear_complexity(s.view(), mode, ctx, budget);
      EXPECT_LE(r.lo, exact);
      EXPECT_GE(r.hi, exact);
      EXPECT_LE(r.lo, r.hi);
      if (r.exact) EXPECT_EQ(r.lo, exact);
      else EXPECT_THROW(r.value(), std::logic_error);
    }
  }
  EXPECT_THROW(nonlinear_complexity(s.view(), DegreeMode::per_variable(1), ctx, 0), std::invalid_argument);
}

TEST(BruteForceOracleTest, TrivialCasesAndGuard) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  Gen gen(11);
  for (int t = 0; t < 10; ++t) {
    const auto s = gen.sequence(ctx, 3);
    EXPECT_TRUE(brute_force_oracle(s, 2, DegreeMode::per_variable(1), ctx));
  }
  const std::vector<FieldElement> zeros(5, ctx.zero());
  EXPECT_TRUE(brute_force_oracle(zeros, 1, DegreeMode::total_degree(1), ctx));
  const FieldCtx f9 = FieldCtx::create(3, 1);
  const auto big = gen.sequence(f9, 8);
  EXPECT_THROW(brute_force_oracle(big, 3, DegreeMode::per_variable(2), f9), std::length_error);
}

TEST(OraclePropertyTest, RandomF4SequencesAgreeWithBruteForce) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  Gen gen(2024);
  int checked = 0;
  for (int t = 0; t < 250; ++t) {
    const auto s = t % 2 ? gen.sequence(ctx, gen.uniform(3, 6)) : gen.biased_sequence(gen.uniform(3, 6), 2);
    for (int m = 1; m <= 2 && m < static_cast<int>(s.size()); ++m) {
      for (const auto& mode : small_modes()) {
        ASSERT_EQ(exists_recurrence(s, m, mode, ctx), brute_force_oracle(s, m, mode, ctx));
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 2000);
}

TEST(ComplexityPropertyTest, MonotoneInPrefixModeAndDegree) {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}}) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    Gen gen(100 + p);
    const int kmax = static_cast<int>(ctx.order());  // one past the exponent cap
    for (int t = 0; t < 30; ++t) {
      const auto s = t < 10 ? build_sequence(ctx, gen.nonzero(ctx), static_cast<int>(gen.uniform(2, ctx.q()))).terms
                            : gen.biased_sequence(gen.uniform(4, 14), 3);
      const std::span<const FieldElement> view(s);
      std::vector<std::vector<int>> nv(kmax + 1), lv(kmax + 1);
      for (int k = 1; k <= kmax; ++k) {
        for (std::size_t n = 1; n <= s.size(); ++n) {
          nv[k].push_back(nonlinear_complexity(view.first(n), DegreeMode::per_variable(k), ctx).value());
          lv[k].push_back(nonlinear_complexity(view.first(n), DegreeMode::total_degree(k), ctx).value());
        }
      }
      for (int k = 1; k <= kmax; ++k) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          ASSERT_GE(lv[k][i], nv[k][i]);
          ASSERT_LE(nv[k][i], static_cast<int>(std::max<std::size_t>(i, 1)));
          if (i > 0) {
            ASSERT_GE(nv[k][i], nv[k][i - 1]);
            ASSERT_GE(lv[k][i], lv[k][i - 1]);
          }
          if (k > 1) {
            ASSERT_LE(nv[k][i], nv[k - 1][i]);
            ASSERT_LE(lv[k][i], lv[k - 1][i]);
          }
        }
      }
      // Per-variable degree saturates at q^2 - 1.
      EXPECT_EQ(nv[kmax], nv[kmax - 1]);
    }
  }
}

TEST(LinearComplexityTest, Examples) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  EXPECT_EQ(linear_complexity(std::vector<FieldElement>(6, ctx.zero()), ctx), 0);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<FieldElement> spike(n, ctx.zero());
    spike.back() = ctx.one();
    EXPECT_EQ(linear_complexity(spike, ctx), static_cast<int>(n));
  }
}

TEST(LinearComplexityTest, AgreesWithExhaustiveSearchAndBracketsDegreeOne) {
  const FieldCtx ctx = FieldCtx::create(2, 1);
  Gen gen(55);
  for (int t = 0; t < 150; ++t) {
    const auto s = gen.sequence(ctx, gen.uniform(1, 6));
    const int lc = linear_complexity(s, ctx);
    ASSERT_EQ(lc, brute_linear_complexity(s, ctx));
    const int l1 = nonlinear_complexity(s, DegreeMode::total_degree(1), ctx).value();
    ASSERT_LE(l1, lc);
    ASSERT_GE(l1, lc - 1);
  }
}

}  // namespace
}  // namespace hermseq
