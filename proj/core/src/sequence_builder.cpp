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

#include "hermseq/sequence_builder.hpp"

#include <stdexcept>
#include <string>

#include "hermseq/hermitian_curve.hpp"

namespace hermseq {

std::uint64_t full_length(std::uint32_t q) {
  return std::uint64_t{q} * (std::uint64_t{q} * q - 2);
}

std::uint64_t term_index(std::uint32_t q, std::uint32_t i, std::uint32_t j) {
  return std::uint64_t{i - 1} * (std::uint64_t{q} * q - 2) + j;
}

Sequence build_sequence(const FieldCtx& ctx, FieldElement a, int ell) {
  if (a.is_zero()) throw std::invalid_argument("build_sequence: a must be nonzero");
  if (ell < 2 || ell > static_cast<int>(ctx.q())) {
    throw std::invalid_argument("build_sequence: ell must satisfy 2 <= ell <= q, got " +
                                std::to_string(ell));
  }
  const CollinearFamily fam = collinear_family(ctx, a);
  const std::uint32_t q = ctx.q();
  const std::uint32_t row = q * q - 2;

  Sequence s;
  s.meta = SequenceMeta{ctx.p(), ctx.e(), q, ctx.modulus(), ctx.epsilon(), a, ell};
  s.terms.reserve(full_length(q));
  for (std::uint32_t i = 1; i <= q; ++i) {
    for (std::uint32_t j = 1; j <= row; ++j) {
      try {
        s.terms.push_back(eval_h(ell, sigma_point(fam.place(i), j, ctx), fam, ctx));
      } catch (const CurveError& err) {
        throw std::logic_error(std::string("build_sequence hit a pole: ") + err.what());
      }
    }
  }
  return s;
}

Sequence prefix(const Sequence& s, std::size_t n) {
  if (n < 1 || n > s.size()) {
    throw std::out_of_range("prefix length " + std::to_string(n) + " outside [1, " +
                            std::to_string(s.size()) + "]");
  }
  Sequence out;
  out.meta = s.meta;
  out.terms.assign(s.terms.begin(), s.terms.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

}  // namespace hermseq
