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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hermseq {

// Thrown for malformed field parameters (non-prime characteristic, reducible
// modulus, unsupported sizes) and for arithmetic on invalid operands.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An element of F_{q^2}, stored as its canonical index.
//
// The index is the base-p number whose most significant digit is the constant
// coefficient, so integer order coincides with lexicographic order on the
// coefficient vector read low degree first. Index 0 is the zero element.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t index_ = 0;
};

// The field F_{q^2} with q = p^e, realised as F_p[z]/(modulus) with
// deg(modulus) = 2e. Immutable after construction.
class FieldCtx {
 public:
  // Builds the context. When `modulus` is empty the lexicographically smallest
  // monic irreducible of degree 2e is chosen. A supplied modulus is given as
  // 2e+1 coefficients, low degree first, and is normalised to monic.
  // The primitive element is the smallest primitive element in canonical order.
  static FieldCtx create(std::uint32_t p, std::uint32_t e,
                         std::span<const std::uint32_t> modulus = {});

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  // Number of elements, q^2.
  std::uint32_t order() const { return order_; }
  // Extension degree over the prime field, 2e.
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement epsilon() const { return epsilon_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return one_; }
  // The class of z in F_p[z]/(modulus).
  FieldElement generator_z() const { return z_; }

  // Coefficients of `a` over F_p, low degree first (length 2e).
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  FieldElement from_prime(std::uint32_t c) const;

  // Every element in canonical order.
  std::vector<FieldElement> elements() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement{0};
    std::uint32_t s = log_[a.index()] + log_[b.index()];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  // Integer powers; negative exponents require a != 0. pow(0, 0) = 1.
  FieldElement pow(FieldElement a, std::int64_t n) const;
  // epsilon^n for any integer n.
  FieldElement epsilon_pow(std::int64_t n) const;

  // Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(FieldElement a) const;
  // True iff a^q = a, i.e. a lies in the subfield F_q.
  bool in_subfield_q(FieldElement a) const { return pow(a, q_) == a; }

  // ':'-joined coefficient vector, low degree first.
  std::string to_string(FieldElement a) const;
  FieldElement parse(std::string_view text) const;

 private:
  FieldCtx() = default;

  FieldElement add_digits(FieldElement a, FieldElement b, bool subtract) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement epsilon_;
  FieldElement one_;
  FieldElement z_;
  std::vector<FieldElement> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> digits_;        // order * degree, low degree first
  std::vector<FieldElement> add_table_;     // order * order when small
  std::vector<FieldElement> neg_table_;
};

bool is_prime(std::uint64_t n);

// Splits a prime power q = p^e; nullopt if q is not a prime power (or q < 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

// Polynomial over F_p with coefficients low degree first. Exposed for tests.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

// b^q + b.
FieldElement rel_trace(FieldElement b, const FieldCtx& ctx);
// a^(q+1).
FieldElement rel_norm(FieldElement a, const FieldCtx& ctx);
// The q solutions of b^q + b = a^(q+1), in canonical order. Solved as an affine
// system over F_p since b -> b^q + b is F_p-linear.
std::vector<FieldElement> hermitian_fiber(FieldElement a, const FieldCtx& ctx);

}  // namespace hermseq
