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

#include "hermseq/linear_solver.hpp"

namespace hermseq {
namespace {

// v -= c * w over the common prefix.
void axpy_neg(const FieldCtx& ctx, std::vector<FieldElement>& v, FieldElement c,
              const std::vector<FieldElement>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_zero()) v[i] = ctx.sub(v[i], ctx.mul(c, w[i]));
  }
}

}  // namespace

StreamingSpanSolver::StreamingSpanSolver(const FieldCtx& ctx, std::span<const FieldElement> target,
                                         bool track_witness)
    : ctx_(&ctx),
      rows_(target.size()),
      track_witness_(track_witness),
      residual_(target.begin(), target.end()) {
  for (auto v : residual_) {
    if (!v.is_zero()) ++residual_nonzero_;
  }
}

void StreamingSpanSolver::eliminate(std::vector<FieldElement>& v,
                                    std::vector<FieldElement>* combo) const {
  // Later basis vectors vanish at earlier pivots, so one pass in insertion
  // order clears every pivot position of v.
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const FieldElement c = v[pivots_[k]];
    if (c.is_zero()) continue;
    axpy_neg(*ctx_, v, c, basis_[k]);
    if (combo) axpy_neg(*ctx_, *combo, c, combos_[k]);
  }
}

bool StreamingSpanSolver::add_column(std::span<const FieldElement> column) {
  if (column.size() != rows_) throw FieldError("column length does not match target length");
  const std::size_t index = columns_seen_++;
  if (consistent() || saturated()) return consistent();

  std::vector<FieldElement> v(column.begin(), column.end());
  std::vector<FieldElement> combo;
  if (track_witness_) {
    combo.assign(accepted_.size() + 1, FieldElement{0});
    combo.back() = ctx_->one();
  }
  eliminate(v, track_witness_ ? &combo : nullptr);

  std::size_t pivot = 0;
  while (pivot < rows_ && v[pivot].is_zero()) ++pivot;
  if (pivot == rows_) return false;

  const FieldElement scale = ctx_->inv(v[pivot]);
  for (auto& x : v) x = ctx_->mul(x, scale);
  for (auto& x : combo) x = ctx_->mul(x, scale);
  accepted_.push_back(index);
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  if (track_witness_) combos_.push_back(std::move(combo));

  const FieldElement c = residual_[pivot];
  if (!c.is_zero()) {
    const auto& b = basis_.back();
    for (std::size_t i = 0; i < rows_; ++i) {
      if (b[i].is_zero()) continue;
      const bool was_zero = residual_[i].is_zero();
      residual_[i] = ctx_->sub(residual_[i], ctx_->mul(c, b[i]));
      if (was_zero && !residual_[i].is_zero()) ++residual_nonzero_;
      if (!was_zero && residual_[i].is_zero()) --residual_nonzero_;
    }
    if (track_witness_) {
      residual_combo_.resize(accepted_.size(), FieldElement{0});
      const auto& cb = combos_.back();
      for (std::size_t i = 0; i < cb.size(); ++i) {
        residual_combo_[i] = ctx_->add(residual_combo_[i], ctx_->mul(c, cb[i]));
      }
    }
  }
  return consistent();
}

LinearSystemOutcome StreamingSpanSolver::outcome() const {
  LinearSystemOutcome out;
  out.consistent = consistent();
  if (out.consistent && track_witness_) {
    SparseAssignment w;
    for (std::size_t i = 0; i < residual_combo_.size(); ++i) {
      if (!residual_combo_[i].is_zero()) w.emplace_back(accepted_[i], residual_combo_[i]);
    }
    out.witness = std::move(w);
  }
  return out;
}

LinearSystemOutcome solve_linear_system(const FieldCtx& ctx,
                                        std::span<const std::vector<FieldElement>> columns,
                                        std::span<const FieldElement> target,
                                        bool want_witness) {
  StreamingSpanSolver solver(ctx, target, want_witness);
  for (const auto& col : columns) {
    if (col.size() != target.size()) throw FieldError("column length does not match target length");
  }
  for (const auto& col : columns) {
    if (solver.add_column(col)) break;
  }
  return solver.outcome();
}

}  // namespace hermseq
