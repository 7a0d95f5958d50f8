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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hermseq/finite_field.hpp"

namespace hermseq {

// Coefficient assignment for a subset of the columns; unlisted columns are 0.
using SparseAssignment = std::vector<std::pair<std::size_t, FieldElement>>;

struct LinearSystemOutcome {
  bool consistent = false;
  std::optional<SparseAssignment> witness;
};

// Decides whether a target vector lies in the span of a stream of columns.
//
// Keeps an echelon basis of the columns seen so far (at most `rows` vectors)
// together with the target reduced against it, so the full matrix is never
// materialised. Each basis vector also records its expression in terms of the
// accepted input columns when a witness is requested; there are at most `rows`
// accepted columns, so that bookkeeping stays O(rows^2).
class StreamingSpanSolver {
 public:
  StreamingSpanSolver(const FieldCtx& ctx, std::span<const FieldElement> target,
                      bool track_witness = false);

  // Feeds the next column. Returns true once the target is in the span.
  bool add_column(std::span<const FieldElement> column);

  bool consistent() const { return residual_nonzero_ == 0; }
  // The basis spans the whole space; every target is reachable.
  bool saturated() const { return basis_.size() == rows_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t columns_seen() const { return columns_seen_; }
  std::size_t rows() const { return rows_; }

  LinearSystemOutcome outcome() const;

 private:
  void eliminate(std::vector<FieldElement>& v, std::vector<FieldElement>* combo) const;

  const FieldCtx* ctx_;
  std::size_t rows_;
  bool track_witness_;
  std::size_t columns_seen_ = 0;

  std::vector<std::vector<FieldElement>> basis_;   // pivot entry normalised to 1
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<FieldElement>> combos_;  // over accepted_
  std::vector<std::size_t> accepted_;              // input column indices

  std::vector<FieldElement> residual_;             // target minus its projection
  std::vector<FieldElement> residual_combo_;       // projection, over accepted_
  std::size_t residual_nonzero_ = 0;
};

// Convenience wrapper over StreamingSpanSolver for a materialised column list.
// Throws FieldError when column lengths differ from the target length.
LinearSystemOutcome solve_linear_system(const FieldCtx& ctx,
                                        std::span<const std::vector<FieldElement>> columns,
                                        std::span<const FieldElement> target,
                                        bool want_witness = true);

}  // namespace hermseq
