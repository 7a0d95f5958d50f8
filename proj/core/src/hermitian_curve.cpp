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

#include "hermseq/hermitian_curve.hpp"

#include <algorithm>
#include <map>

namespace hermseq {

FieldElement Place::x() const {
  if (infinity_) throw CurveError("place at infinity has no affine x coordinate");
  return x_;
}

FieldElement Place::y() const {
  if (infinity_) throw CurveError("place at infinity has no affine y coordinate");
  return y_;
}

bool on_curve(const Place& place, const FieldCtx& ctx) {
  if (place.at_infinity()) return true;
  return rel_trace(place.y(), ctx) == rel_norm(place.x(), ctx);
}

std::string to_string(const Place& place, const FieldCtx& ctx) {
  if (place.at_infinity()) return "P_inf";
  return "(" + ctx.to_string(place.x()) + ", " + ctx.to_string(place.y()) + ")";
}

Place SigmaAction::apply(const Place& place, std::int64_t j, const FieldCtx& ctx) const {
  if (place.at_infinity()) return place;
  const FieldElement sx = ctx.pow(epsilon, -static_cast<std::int64_t>(exponent_x) * j);
  const FieldElement sy = ctx.pow(epsilon, -static_cast<std::int64_t>(exponent_y) * j);
  return Place::affine(ctx.mul(sx, place.x()), ctx.mul(sy, place.y()));
}

std::vector<Place> affine_places(const FieldCtx& ctx) {
  std::vector<Place> out;
  out.reserve(std::size_t{ctx.q()} * ctx.order());
  for (auto x : ctx.elements()) {
    for (auto y : hermitian_fiber(x, ctx)) out.push_back(Place::affine(x, y));
  }
  return out;
}

CollinearFamily collinear_family(const FieldCtx& ctx, FieldElement a) {
  if (a.is_zero()) throw CurveError("collinear family requires a nonzero x-coordinate");
  CollinearFamily fam;
  fam.a = a;
  fam.b_list = hermitian_fiber(a, ctx);
  for (auto b : fam.b_list) fam.places.push_back(Place::affine(a, b));
  return fam;
}

Place sigma_point(const Place& place, std::int64_t j, const FieldCtx& ctx) {
  return SigmaAction::from(ctx).apply(place, j, ctx);
}

std::vector<Place> orbit(const Place& place, const FieldCtx& ctx) {
  if (place.at_infinity()) throw CurveError("orbit of the place at infinity is out of scope");
  if (place.x().is_zero()) throw CurveError("orbit requires a place with nonzero x-coordinate");
  std::vector<Place> out;
  const std::int64_t len = ctx.order() - 1;
  out.reserve(static_cast<std::size_t>(len));
  for (std::int64_t j = 0; j < len; ++j) out.push_back(sigma_point(place, j, ctx));
  return out;
}

FieldElement eval_f(std::size_t i, const Place& place, const CollinearFamily& fam,
                    const FieldCtx& ctx) {
  if (place.at_infinity()) throw CurveError("f_i has a pole at infinity");
  if (i < 1 || i > fam.size()) throw CurveError("f_i index out of range");
  const FieldElement a_q = ctx.pow(fam.a, ctx.q());
  const FieldElement shift = ctx.mul(a_q, ctx.sub(place.x(), fam.a));
  return ctx.sub(ctx.sub(place.y(), fam.b(i)), shift);
}

FieldElement eval_h(int ell, const Place& place, const CollinearFamily& fam, const FieldCtx& ctx) {
  if (ell < 2 || ell > static_cast<int>(ctx.q())) throw CurveError("h_ell requires 2 <= ell <= q");
  if (place.at_infinity()) throw CurveError("h_ell has a pole at infinity");
  FieldElement den = ctx.one();
  for (int i = 1; i < ell; ++i) den = ctx.mul(den, eval_f(static_cast<std::size_t>(i), place, fam, ctx));
  if (den.is_zero()) throw CurveError("h_ell evaluated at one of its poles P_1 .. P_{ell-1}");
  const FieldElement num = ctx.pow(ctx.sub(place.x(), fam.a), ctx.q());
  return ctx.div(num, den);
}

// --- BivariatePoly -------------------------------------------------------

BivariatePoly BivariatePoly::constant(FieldElement c) {
  BivariatePoly out;
  if (!c.is_zero()) out.terms_.push_back({0, 0, c});
  return out;
}

BivariatePoly BivariatePoly::x(const FieldCtx& ctx) {
  BivariatePoly out;
  out.terms_.push_back({1, 0, ctx.one()});
  return out;
}

BivariatePoly BivariatePoly::y(const FieldCtx& ctx) {
  BivariatePoly out;
  out.terms_.push_back({0, 1, ctx.one()});
  return out;
}

void BivariatePoly::normalize(const FieldCtx& ctx) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, FieldElement> acc;
  for (const auto& t : terms_) {
    auto& slot = acc[{t.x_deg, t.y_deg}];
    slot = ctx.add(slot, t.coeff);
  }
  terms_.clear();
  for (const auto& [deg, c] : acc) {
    if (!c.is_zero()) terms_.push_back({deg.first, deg.second, c});
  }
}

BivariatePoly BivariatePoly::plus(const BivariatePoly& other, const FieldCtx& ctx) const {
  BivariatePoly out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  out.normalize(ctx);
  return out;
}

BivariatePoly BivariatePoly::minus(const BivariatePoly& other, const FieldCtx& ctx) const {
  BivariatePoly out = *this;
  for (auto t : other.terms_) {
    t.coeff = ctx.neg(t.coeff);
    out.terms_.push_back(t);
  }
  out.normalize(ctx);
  return out;
}

BivariatePoly BivariatePoly::times(const BivariatePoly& other, const FieldCtx& ctx) const {
  BivariatePoly out;
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      out.terms_.push_back({s.x_deg + t.x_deg, s.y_deg + t.y_deg, ctx.mul(s.coeff, t.coeff)});
    }
  }
  out.normalize(ctx);
  return out;
}

BivariatePoly BivariatePoly::power(std::uint32_t n, const FieldCtx& ctx) const {
  BivariatePoly out = constant(ctx.one());
  for (std::uint32_t i = 0; i < n; ++i) out = out.times(*this, ctx);
  return out;
}

BivariatePoly BivariatePoly::scaled(FieldElement cx, FieldElement cy, const FieldCtx& ctx) const {
  BivariatePoly out = *this;
  for (auto& t : out.terms_) {
    t.coeff = ctx.mul(t.coeff, ctx.mul(ctx.pow(cx, t.x_deg), ctx.pow(cy, t.y_deg)));
  }
  out.normalize(ctx);
  return out;
}

FieldElement BivariatePoly::evaluate(FieldElement x, FieldElement y, const FieldCtx& ctx) const {
  FieldElement acc = ctx.zero();
  for (const auto& t : terms_) {
    acc = ctx.add(acc, ctx.mul(t.coeff, ctx.mul(ctx.pow(x, t.x_deg), ctx.pow(y, t.y_deg))));
  }
  return acc;
}

// --- CurveFunction -------------------------------------------------------

CurveFunction CurveFunction::x_minus(FieldElement a, const FieldCtx& ctx) {
  return CurveFunction(Kind::kXMinusA, "x-a", BivariatePoly::x(ctx).minus(BivariatePoly::constant(a), ctx),
                       BivariatePoly::constant(ctx.one()));
}

CurveFunction CurveFunction::y(const FieldCtx& ctx) {
  return CurveFunction(Kind::kY, "y", BivariatePoly::y(ctx),
                       BivariatePoly::constant(ctx.one()));
}

CurveFunction CurveFunction::f(std::size_t i, const CollinearFamily& fam, const FieldCtx& ctx) {
  if (i < 1 || i > fam.size()) throw CurveError("f_i index out of range");
  const auto xa = x_minus(fam.a, ctx).numerator();
  const auto yy = y(ctx).numerator();
  const auto a_q = BivariatePoly::constant(ctx.pow(fam.a, ctx.q()));
  const auto num = yy.minus(BivariatePoly::constant(fam.b(i)), ctx).minus(a_q.times(xa, ctx), ctx);
  return CurveFunction(Kind::kF, "f_" + std::to_string(i), num, BivariatePoly::constant(ctx.one()));
}

CurveFunction CurveFunction::h(int ell, const CollinearFamily& fam, const FieldCtx& ctx) {
  if (ell < 2 || ell > static_cast<int>(ctx.q())) throw CurveError("h_ell requires 2 <= ell <= q");
  const auto num = x_minus(fam.a, ctx).numerator().power(ctx.q(), ctx);
  BivariatePoly den = BivariatePoly::constant(ctx.one());
  for (int i = 1; i < ell; ++i) den = den.times(f(static_cast<std::size_t>(i), fam, ctx).numerator(), ctx);
  return CurveFunction(Kind::kH, "h_" + std::to_string(ell), num, den);
}

CurveFunction CurveFunction::substituted(FieldElement cx, FieldElement cy, const FieldCtx& ctx) const {
  return CurveFunction(kind_, label_, numerator_.scaled(cx, cy, ctx), denominator_.scaled(cx, cy, ctx));
}

CurveFunction CurveFunction::sigma_power(std::int64_t j, const FieldCtx& ctx) const {
  // sigma^j(f)(x, y) = f(eps^j x, eps^(q+1)j y).
  const std::int64_t q1 = std::int64_t{ctx.q()} + 1;
  return substituted(ctx.epsilon_pow(j), ctx.epsilon_pow(q1 * j), ctx);
}

std::optional<FieldElement> CurveFunction::evaluate(const Place& place, const FieldCtx& ctx) const {
  if (place.at_infinity()) return std::nullopt;
  const FieldElement den = denominator_.evaluate(place.x(), place.y(), ctx);
  if (den.is_zero()) return std::nullopt;
  return ctx.div(numerator_.evaluate(place.x(), place.y(), ctx), den);
}

std::vector<Place> zero_set(const CurveFunction& fn, const FieldCtx& ctx) {
  std::vector<Place> out;
  for (const auto& place : affine_places(ctx)) {
    const auto v = fn.evaluate(place, ctx);
    if (v && v->is_zero()) out.push_back(place);
  }
  return out;
}

std::vector<Place> pole_candidates(const CurveFunction& fn, const FieldCtx& ctx) {
  std::vector<Place> out;
  for (const auto& place : affine_places(ctx)) {
    if (fn.denominator().evaluate(place.x(), place.y(), ctx).is_zero()) out.push_back(place);
  }
  return out;
}

}  // namespace hermseq
