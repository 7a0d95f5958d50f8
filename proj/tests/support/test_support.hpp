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
#include <random>
#include <span>
#include <vector>

#include "hermseq/finite_field.hpp"

namespace hermseq::testing {

// (p, e) pairs for every q used by the structural tests.
inline const std::vector<std::pair<std::uint32_t, std::uint32_t>>& small_fields() {
  static const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  return fields;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  FieldElement element(const FieldCtx& ctx) {
    return FieldElement{static_cast<std::uint32_t>(uniform(0, ctx.order() - 1))};
  }
  FieldElement nonzero(const FieldCtx& ctx) {
    return FieldElement{static_cast<std::uint32_t>(uniform(1, ctx.order() - 1))};
  }
  std::vector<FieldElement> sequence(const FieldCtx& ctx, std::size_t n) {
    std::vector<FieldElement> t(n);
    for (auto& v : t) v = element(ctx);
    return t;
  }
  // Small alphabet drawn from the field, so recurrences show up more often.
  std::vector<FieldElement> biased_sequence(std::size_t n, std::uint32_t alphabet) {
    std::vector<FieldElement> t(n);
    for (auto& v : t) v = FieldElement{static_cast<std::uint32_t>(uniform(0, alphabet - 1))};
    return t;
  }

 private:
  std::mt19937_64 rng_;
};

// Schoolbook multiplication of coefficient vectors reduced by the modulus.
// Shares nothing with the table-driven path.
inline std::vector<std::uint32_t> naive_mul(const FieldCtx& ctx, const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
  const std::uint32_t p = ctx.p();
  const std::size_t d = ctx.degree();
  std::vector<std::uint32_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const auto& mod = ctx.modulus();  // monic, length d + 1
  for (std::size_t top = 2 * d - 1; top >= d; --top) {
    const std::uint32_t c = prod[top];
    if (c != 0) {
      for (std::size_t i = 0; i <= d; ++i) {
        const std::size_t at = top - d + i;
        prod[at] = (prod[at] + p * p - (c * mod[i]) % p) % p;
      }
    }
  }
  prod.resize(d);
  return prod;
}

// Rank of a dense matrix (list of rows) by textbook Gaussian elimination.
inline std::size_t dense_rank(const FieldCtx& ctx, std::vector<std::vector<FieldElement>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const FieldElement inv = ctx.inv(rows[rank][c]);
    for (auto& v : rows[rank]) v = ctx.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const FieldElement f = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = ctx.sub(rows[r][j], ctx.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// Consistency via rank(A) == rank([A | b]).
inline bool dense_consistent(const FieldCtx& ctx, const std::vector<std::vector<FieldElement>>& columns,
                             const std::vector<FieldElement>& target) {
  const std::size_t r = target.size();
  std::vector<std::vector<FieldElement>> a(r), ab(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (const auto& col : columns) a[i].push_back(col[i]);
    ab[i] = a[i];
    ab[i].push_back(target[i]);
  }
  if (columns.empty()) {
    for (auto v : target)
      if (!v.is_zero()) return false;
    return true;
  }
  return dense_rank(ctx, a) == dense_rank(ctx, ab);
}

// Enumerates every linear combination of the columns.
inline bool span_contains(const FieldCtx& ctx, const std::vector<std::vector<FieldElement>>& columns,
                          const std::vector<FieldElement>& target) {
  const std::size_t c = columns.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c; ++i) total *= ctx.order();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<FieldElement> acc(target.size(), ctx.zero());
    std::uint64_t rest = code;
    for (std::size_t j = 0; j < c; ++j) {
      const FieldElement coeff{static_cast<std::uint32_t>(rest % ctx.order())};
      rest /= ctx.order();
      for (std::size_t i = 0; i < target.size(); ++i) acc[i] = ctx.add(acc[i], ctx.mul(coeff, columns[j][i]));
    }
    if (acc == target) return true;
  }
  return false;
}

}  // namespace hermseq::testing
