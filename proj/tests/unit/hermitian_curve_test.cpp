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

#include <set>

#include "hermseq/hermitian_curve.hpp"
#include "test_support.hpp"

namespace hermseq {
namespace {

using testing::Gen;
using testing::small_fields;

class F4Curve : public ::testing::Test {
 protected:
  FieldCtx ctx = FieldCtx::create(2, 1);
  FieldElement z = ctx.generator_z();
  FieldElement z1 = ctx.add(ctx.generator_z(), ctx.one());
};

TEST_F(F4Curve, CollinearFamilyAtOne) {
  const auto fam = collinear_family(ctx, ctx.one());
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam.place(1), Place::affine(ctx.one(), z));
  EXPECT_EQ(fam.place(2), Place::affine(ctx.one(), z1));
  EXPECT_THROW(collinear_family(ctx, ctx.zero()), CurveError);
}

TEST_F(F4Curve, SigmaPointExample) {
  const Place p = Place::affine(ctx.one(), z);
  const Place img = sigma_point(p, 1, ctx);
  EXPECT_EQ(img, Place::affine(z1, z));
  EXPECT_TRUE(on_curve(img, ctx));
  EXPECT_EQ(sigma_point(p, 0, ctx), p);
  EXPECT_EQ(sigma_point(p, 3, ctx), p);
  EXPECT_EQ(sigma_point(Place::infinity(), 5, ctx), Place::infinity());
}

TEST_F(F4Curve, EvalFExamples) {
  const auto fam = collinear_family(ctx, ctx.one());
  EXPECT_EQ(eval_f(1, Place::affine(z1, z), fam, ctx), z);
  EXPECT_TRUE(eval_f(1, fam.place(1), fam, ctx).is_zero());
  EXPECT_FALSE(eval_f(1, fam.place(2), fam, ctx).is_zero());
  EXPECT_THROW(eval_f(1, Place::infinity(), fam, ctx), CurveError);
}

TEST_F(F4Curve, EvalHExamples) {
  const auto fam = collinear_family(ctx, ctx.one());
  EXPECT_TRUE(eval_h(2, fam.place(2), fam, ctx).is_zero());
  EXPECT_THROW(eval_h(2, fam.place(1), fam, ctx), CurveError);
  EXPECT_THROW(eval_h(2, Place::infinity(), fam, ctx), CurveError);
  EXPECT_THROW(eval_h(1, fam.place(2), fam, ctx), CurveError);
  EXPECT_THROW(eval_h(3, fam.place(2), fam, ctx), CurveError);
  EXPECT_FALSE(eval_h(2, sigma_point(fam.place(1), 1, ctx), fam, ctx).is_zero());
}

TEST_F(F4Curve, OrbitErrors) {
  EXPECT_THROW(orbit(Place::infinity(), ctx), CurveError);
  EXPECT_THROW(orbit(Place::affine(ctx.zero(), ctx.zero()), ctx), CurveError);
  EXPECT_EQ(orbit(Place::affine(ctx.one(), z), ctx).size(), 3u);
}

TEST_F(F4Curve, InfinityHasNoCoordinates) {
  EXPECT_THROW(Place::infinity().x(), CurveError);
  EXPECT_TRUE(on_curve(Place::infinity(), ctx));
  EXPECT_FALSE(on_curve(Place::affine(ctx.one(), ctx.zero()), ctx));
  EXPECT_LT(Place::affine(z1, z1), Place::infinity());
}

TEST(CurveStructureTest, AffinePlacesAreSortedDistinctAndOnCurve) {
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    const auto places = affine_places(ctx);
    const std::size_t q = ctx.q();
    ASSERT_EQ(places.size(), q * q * q);
    EXPECT_TRUE(std::is_sorted(places.begin(), places.end()));
    EXPECT_EQ(std::set<Place>(places.begin(), places.end()).size(), places.size());
    for (const auto& pl : places) ASSERT_EQ(rel_trace(pl.y(), ctx), rel_norm(pl.x(), ctx));
  }
}

TEST(CurveStructureTest, SigmaIsABijectionAndAGroupAction) {
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    const auto places = affine_places(ctx);
    Gen gen(ctx.q());
    for (int t = 0; t < 5; ++t) {
      const auto j1 = static_cast<std::int64_t>(gen.uniform(0, 40)) - 20;
      const auto j2 = static_cast<std::int64_t>(gen.uniform(0, 40)) - 20;
      std::set<Place> image;
      for (const auto& pl : places) {
        const Place s = sigma_point(pl, j1, ctx);
        ASSERT_TRUE(on_curve(s, ctx));
        image.insert(s);
        ASSERT_EQ(sigma_point(s, j2, ctx), sigma_point(pl, j1 + j2, ctx));
      }
      EXPECT_EQ(image.size(), places.size());
    }
  }
}

TEST(CurveStructureTest, ExactOrderAndOrbitPartition) {
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    if (ctx.q() > 4) continue;
    const std::int64_t group = ctx.order() - 1;
    EXPECT_EQ(SigmaAction::from(ctx).order(ctx), static_cast<std::uint64_t>(group));
    for (const auto& pl : affine_places(ctx)) {
      if (pl.x().is_zero()) continue;
      std::int64_t j = 1;
      while (sigma_point(pl, j, ctx) != pl) ++j;
      ASSERT_EQ(j, group);
    }
  }
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    for (auto a : ctx.elements()) {
      if (a.is_zero()) continue;
      const auto fam = collinear_family(ctx, a);
      std::set<Place> covered;
      for (const auto& pl : fam.places) {
        const auto orb = orbit(pl, ctx);
        for (const auto& o : orb) ASSERT_TRUE(covered.insert(o).second);
      }
      ASSERT_EQ(covered.size(), std::size_t{ctx.q()} * (ctx.order() - 1));
      for (const auto& pl : affine_places(ctx)) ASSERT_EQ(covered.count(pl) == 0, pl.x().is_zero());
      if (ctx.q() > 3) break;  // every a for q <= 3, the first one beyond
    }
  }
}

TEST(CurveStructureTest, ZeroSetsAndPoles) {
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    const auto fam = collinear_family(ctx, ctx.epsilon());
    EXPECT_EQ(zero_set(CurveFunction::x_minus(fam.a, ctx), ctx), fam.places);
    const auto zy = zero_set(CurveFunction::y(ctx), ctx);
    EXPECT_EQ(zy, (std::vector<Place>{Place::affine(ctx.zero(), ctx.zero())}));
    for (std::size_t i = 1; i <= fam.size(); ++i) {
      EXPECT_EQ(zero_set(CurveFunction::f(i, fam, ctx), ctx), (std::vector<Place>{fam.place(i)}));
      EXPECT_TRUE(pole_candidates(CurveFunction::f(i, fam, ctx), ctx).empty());
    }
    for (int ell = 2; ell <= static_cast<int>(ctx.q()); ++ell) {
      const auto h = CurveFunction::h(ell, fam, ctx);
      EXPECT_EQ(pole_candidates(h, ctx), std::vector<Place>(fam.places.begin(), fam.places.begin() + ell - 1));
    }
  }
}

TEST(CurveFunctionTest, ExpandedRouteAgreesWithClosedForms) {
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    if (ctx.q() > 5) continue;
    const auto fam = collinear_family(ctx, ctx.epsilon());
    for (int ell = 2; ell <= static_cast<int>(ctx.q()); ++ell) {
      const auto h = CurveFunction::h(ell, fam, ctx);
      for (const auto& pl : affine_places(ctx)) {
        const auto v = h.evaluate(pl, ctx);
        const bool pole = std::find(fam.places.begin(), fam.places.begin() + ell - 1, pl) !=
                          fam.places.begin() + ell - 1;
        if (pole) {
          ASSERT_FALSE(v.has_value());
          ASSERT_THROW(eval_h(ell, pl, fam, ctx), CurveError);
        } else {
          ASSERT_TRUE(v.has_value());
          ASSERT_EQ(*v, eval_h(ell, pl, fam, ctx));
        }
      }
    }
    for (std::size_t i = 1; i <= fam.size(); ++i) {
      const auto f = CurveFunction::f(i, fam, ctx);
      for (const auto& pl : affine_places(ctx)) ASSERT_EQ(*f.evaluate(pl, ctx), eval_f(i, pl, fam, ctx));
    }
    EXPECT_FALSE(CurveFunction::y(ctx).evaluate(Place::infinity(), ctx).has_value());
  }
}

TEST(CurveFunctionTest, SubstitutionIdentityOnSampledPoints) {
  for (auto [p, e] : small_fields()) {
    const FieldCtx ctx = FieldCtx::create(p, e);
    if (ctx.q() > 5) continue;
    const auto fam = collinear_family(ctx, ctx.epsilon());
    std::vector<Place> pts;
    for (const auto& pl : fam.places) {
      const auto orb = orbit(pl, ctx);
      pts.insert(pts.end(), orb.begin(), orb.end());
    }
    Gen gen(77 + ctx.q());
    const std::int64_t group = ctx.order() - 1;
    for (int t = 0; t < 100; ++t) {
      const Place pl = pts[gen.uniform(0, pts.size() - 1)];
      const std::int64_t j = static_cast<std::int64_t>(gen.uniform(0, 2 * group)) - group;
      const int ell = static_cast<int>(gen.uniform(2, ctx.q()));
      const auto h = CurveFunction::h(ell, fam, ctx);
      const auto lhs = h.evaluate(sigma_point(pl, j, ctx), ctx);
      const auto rhs = h.sigma_power(-j, ctx).evaluate(pl, ctx);
      ASSERT_EQ(lhs, rhs) << "q=" << ctx.q() << " j=" << j << " ell=" << ell;
    }
  }
}

TEST(BivariatePolyTest, ArithmeticMatchesPointwiseEvaluation) {
  const FieldCtx ctx = FieldCtx::create(3, 1);
  Gen gen(5);
  const auto x = BivariatePoly::x(ctx);
  const auto y = BivariatePoly::y(ctx);
  for (int t = 0; t < 50; ++t) {
    const auto c = gen.element(ctx);
    const auto a = x.times(y, ctx).plus(BivariatePoly::constant(c), ctx);  // xy + c
    const auto b = x.power(3, ctx).minus(y, ctx);                          // x^3 - y
    const auto u = gen.element(ctx), v = gen.element(ctx);
    const auto av = ctx.add(ctx.mul(u, v), c);
    const auto bv = ctx.sub(ctx.pow(u, 3), v);
    ASSERT_EQ(a.times(b, ctx).evaluate(u, v, ctx), ctx.mul(av, bv));
    ASSERT_EQ(a.plus(b, ctx).evaluate(u, v, ctx), ctx.add(av, bv));
    const auto cx = gen.element(ctx), cy = gen.element(ctx);
    ASSERT_EQ(a.scaled(cx, cy, ctx).evaluate(u, v, ctx), a.evaluate(ctx.mul(cx, u), ctx.mul(cy, v), ctx));
  }
  EXPECT_TRUE(x.minus(x, ctx).is_zero());
}

}  // namespace
}  // namespace hermseq
