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
#include <stdexcept>
#include <string>
#include <vector>

#include "hermseq/finite_field.hpp"

namespace hermseq {

class CurveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rational place of the Hermitian function field y^q + y = x^(q+1) over
// F_{q^2}: an affine point or the place at infinity.
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place affine(FieldElement x, FieldElement y) { return Place(x, y); }

  bool at_infinity() const { return infinity_; }
  FieldElement x() const;
  FieldElement y() const;

  // Infinity sorts after every affine place.
  friend auto operator<=>(const Place&, const Place&) = default;

 private:
  Place() = default;
  Place(FieldElement x, FieldElement y) : infinity_(false), x_(x), y_(y) {}

  // Declared first so the defaulted ordering compares it first.
  bool infinity_ = true;
  FieldElement x_;
  FieldElement y_;
};

bool on_curve(const Place& place, const FieldCtx& ctx);
std::string to_string(const Place& place, const FieldCtx& ctx);

// The q places P_1, ..., P_q on the line x = a (a != 0), in canonical fiber
// order, which together with P_inf are the collinear family.
struct CollinearFamily {
  FieldElement a;
  std::vector<FieldElement> b_list;
  std::vector<Place> places;

  std::size_t size() const { return places.size(); }
  // 1-based, matching P_1 .. P_q.
  const Place& place(std::size_t i) const { return places.at(i - 1); }
  FieldElement b(std::size_t i) const { return b_list.at(i - 1); }
};

// The automorphism x -> eps x, y -> eps^(q+1) y. On places it acts through
// the inverse powers: sigma^j (u, v) = (eps^-j u, eps^-(q+1)j v).
struct SigmaAction {
  FieldElement epsilon;
  std::uint32_t exponent_x = 1;
  std::uint32_t exponent_y = 0;  // q + 1

  static SigmaAction from(const FieldCtx& ctx) {
    return SigmaAction{ctx.epsilon(), 1, ctx.q() + 1};
  }
  Place apply(const Place& place, std::int64_t j, const FieldCtx& ctx) const;
  // q^2 - 1.
  std::uint64_t order(const FieldCtx& ctx) const { return ctx.order() - 1; }
};

// All q^3 affine places, sorted by (x, y).
std::vector<Place> affine_places(const FieldCtx& ctx);

CollinearFamily collinear_family(const FieldCtx& ctx, FieldElement a);

Place sigma_point(const Place& place, std::int64_t j, const FieldCtx& ctx);

// sigma^j(P) for j = 0 .. q^2 - 2. P must be affine with x(P) != 0.
std::vector<Place> orbit(const Place& place, const FieldCtx& ctx);

// f_i(P) = y - b_i - a^q (x - a). Throws CurveError at infinity.
FieldElement eval_f(std::size_t i, const Place& place, const CollinearFamily& fam,
                    const FieldCtx& ctx);

// h_ell(P) = (x - a)^q / (f_1 ... f_{ell-1}), 2 <= ell <= q. Throws CurveError
// at infinity and at the poles P_1 .. P_{ell-1}.
FieldElement eval_h(int ell, const Place& place, const CollinearFamily& fam, const FieldCtx& ctx);

// Polynomial in x and y with F_{q^2} coefficients, stored as sorted terms.
class BivariatePoly {
 public:
  struct Term {
    std::uint32_t x_deg;
    std::uint32_t y_deg;
    FieldElement coeff;
  };

  BivariatePoly() = default;
  static BivariatePoly constant(FieldElement c);
  static BivariatePoly x(const FieldCtx& ctx);
  static BivariatePoly y(const FieldCtx& ctx);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BivariatePoly plus(const BivariatePoly& other, const FieldCtx& ctx) const;
  BivariatePoly minus(const BivariatePoly& other, const FieldCtx& ctx) const;
  BivariatePoly times(const BivariatePoly& other, const FieldCtx& ctx) const;
  BivariatePoly power(std::uint32_t n, const FieldCtx& ctx) const;
  // p(cx * x, cy * y).
  BivariatePoly scaled(FieldElement cx, FieldElement cy, const FieldCtx& ctx) const;
  FieldElement evaluate(FieldElement x, FieldElement y, const FieldCtx& ctx) const;

 private:
  void normalize(const FieldCtx& ctx);
  std::vector<Term> terms_;
};

// A rational function numerator / denominator on the curve, expanded into
// explicit polynomials. Evaluation through this route is independent of the
// closed-form eval_f / eval_h.
class CurveFunction {
 public:
  enum class Kind { kXMinusA, kY, kF, kH };

  static CurveFunction x_minus(FieldElement a, const FieldCtx& ctx);
  static CurveFunction y(const FieldCtx& ctx);
  static CurveFunction f(std::size_t i, const CollinearFamily& fam, const FieldCtx& ctx);
  static CurveFunction h(int ell, const CollinearFamily& fam, const FieldCtx& ctx);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const BivariatePoly& numerator() const { return numerator_; }
  const BivariatePoly& denominator() const { return denominator_; }

  // The function with x -> cx x and y -> cy y substituted. With cx = eps^-j
  // and cy = eps^-(q+1)j this is sigma^-j applied to the function.
  CurveFunction substituted(FieldElement cx, FieldElement cy, const FieldCtx& ctx) const;
  CurveFunction sigma_power(std::int64_t j, const FieldCtx& ctx) const;

  // nullopt where the denominator vanishes (a pole) or at infinity.
  std::optional<FieldElement> evaluate(const Place& place, const FieldCtx& ctx) const;

 private:
  CurveFunction(Kind kind, std::string label, BivariatePoly num, BivariatePoly den)
      : kind_(kind), label_(std::move(label)), numerator_(std::move(num)),
        denominator_(std::move(den)) {}

  Kind kind_;
  std::string label_;
  BivariatePoly numerator_;
  BivariatePoly denominator_;
};

// Affine places where the function is defined and evaluates to zero.
std::vector<Place> zero_set(const CurveFunction& fn, const FieldCtx& ctx);

// Affine places where the denominator vanishes.
std::vector<Place> pole_candidates(const CurveFunction& fn, const FieldCtx& ctx);

}  // namespace hermseq
