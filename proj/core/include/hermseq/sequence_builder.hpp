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
#include <span>
#include <vector>

#include "hermseq/finite_field.hpp"

namespace hermseq {

// Where a sequence came from: enough to rebuild it bit for bit.
struct SequenceMeta {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  FieldElement epsilon;
  FieldElement a;
  int ell = 0;
};

struct Sequence {
  std::vector<FieldElement> terms;
  SequenceMeta meta;

  std::size_t size() const { return terms.size(); }
  std::span<const FieldElement> view() const { return terms; }
};

// q (q^2 - 2).
std::uint64_t full_length(std::uint32_t q);

// Term index (1-based) of h_ell(sigma^j(P_i)), for 1 <= i <= q, 1 <= j <= q^2 - 2.
std::uint64_t term_index(std::uint32_t q, std::uint32_t i, std::uint32_t j);

// s_{(i-1)(q^2-2)+j} = h_ell(sigma^j(P_i)), rows i = 1..q outer, j = 1..q^2-2
// inner. Requires a != 0 and 2 <= ell <= q.
Sequence build_sequence(const FieldCtx& ctx, FieldElement a, int ell);

// The initial sequence (s_1, ..., s_n), 1 <= n <= size.
Sequence prefix(const Sequence& s, std::size_t n);

}  // namespace hermseq
