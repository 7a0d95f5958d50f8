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

#include "hermseq/complexity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

namespace hermseq {

DegreeMode::DegreeMode(Kind kind, int k) : kind_(kind), k_(k) {
  if (k < 1) throw std::invalid_argument("degree bound k must be at least 1");
}

std::string DegreeMode::name() const {
  return per_variable() ? "per-variable" : "total-degree";
}

FieldElement Recurrence::evaluate(std::span<const FieldElement> window, const FieldCtx& ctx) const {
  FieldElement acc = ctx.zero();
  for (const auto& [exps, coeff] : terms) {
    FieldElement v = coeff;
    for (std::size_t j = 0; j < exps.size(); ++j) v = ctx.mul(v, ctx.pow(window[j], exps[j]));
    acc = ctx.add(acc, v);
  }
  return acc;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

int exponent_cap(const DegreeMode& mode, const FieldCtx& ctx) {
  return std::min<int>(mode.k(), static_cast<int>(ctx.order()) - 1);
}

// Depth-first walk over exponent vectors in lexicographic order, carrying the
// column of monomial values over the window rows.
class MonomialWalker {
 public:
  MonomialWalker(const FieldCtx& ctx, const std::vector<std::vector<FieldElement>>& windows, int m,
                 int cap, int total_limit)
      : ctx_(ctx), windows_(windows), m_(m), cap_(cap), total_limit_(total_limit),
        exps_(static_cast<std::size_t>(m), 0),
        prods_(static_cast<std::size_t>(m) + 1, std::vector<FieldElement>(windows.size())) {
    std::fill(prods_[0].begin(), prods_[0].end(), ctx.one());
  }

  // visit(exps, column) returns false to stop the walk.
  template <typename Visit>
  void run(Visit&& visit) {
    stopped_ = false;
    descend(0, total_limit_, visit);
  }

 private:
  template <typename Visit>
  void descend(int depth, int remaining, Visit& visit) {
    if (depth == m_) {
      if (!visit(std::as_const(exps_), std::as_const(prods_[static_cast<std::size_t>(m_)]))) {
        stopped_ = true;
      }
      return;
    }
    const auto d = static_cast<std::size_t>(depth);
    auto& next = prods_[d + 1];
    next = prods_[d];
    const int top = std::min(cap_, remaining);
    for (int e = 0; e <= top && !stopped_; ++e) {
      exps_[d] = static_cast<std::uint32_t>(e);
      if (e > 0) {
        for (std::size_t r = 0; r < windows_.size(); ++r) next[r] = ctx_.mul(next[r], windows_[r][d]);
      }
      descend(depth + 1, remaining - e, visit);
    }
    exps_[d] = 0;
  }

  const FieldCtx& ctx_;
  const std::vector<std::vector<FieldElement>>& windows_;
  int m_;
  int cap_;
  int total_limit_;
  std::vector<std::uint32_t> exps_;
  std::vector<std::vector<FieldElement>> prods_;
  bool stopped_ = false;
};

void check_order(std::span<const FieldElement> t, int m) {
  if (m < 1 || static_cast<std::size_t>(m) >= t.size()) {
    throw std::out_of_range("window length m = " + std::to_string(m) + " outside [1, n-1] for n = " +
                            std::to_string(t.size()));
  }
}

}  // namespace

std::uint64_t monomial_count(int m, const DegreeMode& mode, const FieldCtx& ctx) {
  const int cap = exponent_cap(mode, ctx);
  if (mode.per_variable()) {
    std::uint64_t out = 1;
    for (int i = 0; i < m; ++i) out = sat_mul(out, static_cast<std::uint64_t>(cap) + 1);
    return out;
  }
  // ways[s] = number of capped vectors over the processed variables summing to s.
  const int k = mode.k();
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(k) + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < m; ++i) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (int s = 0; s <= k; ++s) {
      if (ways[static_cast<std::size_t>(s)] == 0) continue;
      for (int e = 0; e <= cap && s + e <= k; ++e) {
        auto& slot = next[static_cast<std::size_t>(s + e)];
        slot = sat_add(slot, ways[static_cast<std::size_t>(s)]);
      }
    }
    ways = std::move(next);
  }
  std::uint64_t out = 0;
  for (auto w : ways) out = sat_add(out, w);
  return out;
}

RecurrenceCheck check_recurrence(std::span<const FieldElement> t, int m, const DegreeMode& mode,
                                 const FieldCtx& ctx, std::uint64_t budget, Recurrence* witness) {
  check_order(t, m);
  const std::size_t n = t.size();
  const auto mm = static_cast<std::size_t>(m);

  // Identical windows must share a successor; duplicates add no information.
  std::vector<std::vector<FieldElement>> windows;
  std::vector<FieldElement> target;
  std::map<std::vector<FieldElement>, FieldElement> seen;
  for (std::size_t i = 0; i + mm < n; ++i) {
    std::vector<FieldElement> w(t.begin() + static_cast<std::ptrdiff_t>(i),
                                t.begin() + static_cast<std::ptrdiff_t>(i + mm));
    const auto [it, inserted] = seen.emplace(w, t[i + mm]);
    if (!inserted) {
      if (it->second != t[i + mm]) return RecurrenceCheck::kInfeasible;
      continue;
    }
    windows.push_back(std::move(w));
    target.push_back(t[i + mm]);
  }

  if (witness) {
    witness->m = m;
    witness->terms.clear();
  }

  StreamingSpanSolver solver(ctx, target, witness != nullptr);
  if (solver.consistent()) return RecurrenceCheck::kFeasible;

  const int cap = exponent_cap(mode, ctx);
  const int total_limit = mode.per_variable() ? cap * m : mode.k();
  MonomialWalker walker(ctx, windows, m, cap, total_limit);
  std::uint64_t streamed = 0;
  bool exhausted_budget = false;
  walker.run([&](const std::vector<std::uint32_t>&, const std::vector<FieldElement>& column) {
    if (streamed == budget) {
      exhausted_budget = true;
      return false;
    }
    ++streamed;
    return !solver.add_column(column);
  });

  if (solver.consistent()) {
    if (witness && !solver.outcome().witness->empty()) {
      const auto outcome = solver.outcome();
      std::map<std::size_t, FieldElement> wanted(outcome.witness->begin(), outcome.witness->end());
      std::size_t index = 0;
      MonomialWalker again(ctx, windows, m, cap, total_limit);
      again.run([&](const std::vector<std::uint32_t>& exps, const std::vector<FieldElement>&) {
        const auto it = wanted.find(index++);
        if (it != wanted.end()) witness->terms.emplace_back(exps, it->second);
        return index <= wanted.rbegin()->first;
      });
    }
    return RecurrenceCheck::kFeasible;
  }
  return exhausted_budget ? RecurrenceCheck::kUnknown : RecurrenceCheck::kInfeasible;
}

bool exists_recurrence(std::span<const FieldElement> t, int m, const DegreeMode& mode,
                       const FieldCtx& ctx) {
  return check_recurrence(t, m, mode, ctx, std::numeric_limits<std::uint64_t>::max()) ==
         RecurrenceCheck::kFeasible;
}

ComplexityResult nonlinear_complexity(std::span<const FieldElement> t, const DegreeMode& mode,
                                      const FieldCtx& ctx, std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("monomial budget must be at least 1");
  if (std::all_of(t.begin(), t.end(), [](FieldElement v) { return v.is_zero(); })) {
    return ComplexityResult::exact_value(0);
  }
  const int n = static_cast<int>(t.size());
  if (n == 1) return ComplexityResult::exact_value(1);

  // Feasibility is monotone in m, so an infeasible m proves every smaller m
  // infeasible as well.
  int lo = 1;
  for (int m = 1; m <= n - 1; ++m) {
    switch (check_recurrence(t, m, mode, ctx, budget)) {
      case RecurrenceCheck::kFeasible:
        return ComplexityResult::bracket(lo, m);
      case RecurrenceCheck::kInfeasible:
        lo = m + 1;
        break;
      case RecurrenceCheck::kUnknown:
        break;
    }
  }
  throw std::logic_error("nonlinear_complexity: m = n-1 must always be feasible");
}

bool brute_force_oracle(std::span<const FieldElement> t, int m, const DegreeMode& mode,
                        const FieldCtx& ctx) {
  check_order(t, m);
  const std::size_t n = t.size();
  const auto mm = static_cast<std::size_t>(m);
  const auto k = static_cast<std::uint32_t>(mode.k());

  // Every exponent vector in [0, k]^m, filtered by the degree mode.
  std::vector<std::vector<std::uint32_t>> monomials;
  std::vector<std::uint32_t> exps(mm, 0);
  while (true) {
    std::uint32_t total = 0;
    for (auto v : exps) total += v;
    if (mode.per_variable() || total <= k) monomials.push_back(exps);
    std::size_t pos = 0;
    while (pos < mm && exps[pos] == k) exps[pos++] = 0;
    if (pos == mm) break;
    ++exps[pos];
  }

  double candidates = 1;
  for (std::size_t i = 0; i < monomials.size(); ++i) candidates *= ctx.order();
  if (candidates > double(1 << 24)) {
    throw std::length_error("brute_force_oracle: more than 2^24 candidate polynomials");
  }

  const std::size_t rows = n - mm;
  std::vector<std::vector<FieldElement>> values(rows, std::vector<FieldElement>(monomials.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      FieldElement v = ctx.one();
      for (std::size_t j = 0; j < mm; ++j) v = ctx.mul(v, ctx.pow(t[i + j], monomials[c][j]));
      values[i][c] = v;
    }
  }

  std::vector<std::uint32_t> coeffs(monomials.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < rows && ok; ++i) {
      FieldElement acc = ctx.zero();
      for (std::size_t c = 0; c < coeffs.size(); ++c) {
        acc = ctx.add(acc, ctx.mul(FieldElement{coeffs[c]}, values[i][c]));
      }
      ok = acc == t[i + mm];
    }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < coeffs.size() && coeffs[pos] == ctx.order() - 1) coeffs[pos++] = 0;
    if (pos == coeffs.size()) return false;
    ++coeffs[pos];
  }
}

int linear_complexity(std::span<const FieldElement> t, const FieldCtx& ctx) {
  std::vector<FieldElement> c{ctx.one()};
  std::vector<FieldElement> b{ctx.one()};
  int l = 0;
  std::size_t shift = 1;
  FieldElement last = ctx.one();
  for (std::size_t n = 0; n < t.size(); ++n) {
    FieldElement d = t[n];
    for (int i = 1; i <= l; ++i) d = ctx.add(d, ctx.mul(c[static_cast<std::size_t>(i)], t[n - static_cast<std::size_t>(i)]));
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    const FieldElement coef = ctx.div(d, last);
    std::vector<FieldElement> updated = c;
    if (updated.size() < b.size() + shift) updated.resize(b.size() + shift, ctx.zero());
    for (std::size_t i = 0; i < b.size(); ++i) {
      updated[i + shift] = ctx.sub(updated[i + shift], ctx.mul(coef, b[i]));
    }
    if (2 * static_cast<std::size_t>(l) <= n) {
      l = static_cast<int>(n) + 1 - l;
      b = std::move(c);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(updated);
  }
  return l;
}

}  // namespace hermseq
