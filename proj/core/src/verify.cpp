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

#include "hermseq/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "hermseq/bounds.hpp"
#include "hermseq/hermitian_curve.hpp"
#include "hermseq/parallel.hpp"
#include "hermseq/sequence_builder.hpp"

namespace hermseq {
namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string group, std::uint32_t q)
      : report_(report), group_(std::move(group)), q_(q) {}

  void add(std::string name, bool passed, std::string detail = {}) {
    report_.checks.push_back(CheckResult{group_, std::move(name), q_, passed, std::move(detail)});
  }

 private:
  VerifyReport& report_;
  std::string group_;
  std::uint32_t q_;
};

std::vector<std::int64_t> remark_k_sample(std::int64_t q) {
  std::set<std::int64_t> ks{2, 3, (q * q - 2 + 1) / 2, q * q - 2};
  return {ks.begin(), ks.end()};
}

void check_field(const FieldCtx& ctx, VerifyReport& report) {
  Recorder rec(report, "field", ctx.q());
  const std::uint64_t group = ctx.order() - 1;
  rec.add("epsilon has order q^2-1", ctx.multiplicative_order(ctx.epsilon()) == group);

  bool fermat = true;
  bool trace_norm_in_fq = true;
  std::uint64_t fiber_total = 0;
  bool fibers_ok = true;
  for (auto a : ctx.elements()) {
    if (!a.is_zero() && ctx.pow(a, static_cast<std::int64_t>(group)) != ctx.one()) fermat = false;
    if (!ctx.in_subfield_q(rel_trace(a, ctx)) || !ctx.in_subfield_q(rel_norm(a, ctx))) {
      trace_norm_in_fq = false;
    }
    const auto fiber = hermitian_fiber(a, ctx);
    fiber_total += fiber.size();
    for (auto b : fiber) fibers_ok = fibers_ok && rel_trace(b, ctx) == rel_norm(a, ctx);
    fibers_ok = fibers_ok && std::adjacent_find(fiber.begin(), fiber.end()) == fiber.end();
  }
  rec.add("a^(q^2-1) = 1 for all nonzero a", fermat);
  rec.add("trace and norm land in F_q", trace_norm_in_fq);
  rec.add("fibers hold q distinct roots, q^3 in total",
          fibers_ok && fiber_total == std::uint64_t{ctx.q()} * ctx.order(),
          "total=" + std::to_string(fiber_total));
}

void check_curve(const FieldCtx& ctx, const CollinearFamily& fam, std::uint64_t samples,
                 VerifyReport& report) {
  Recorder rec(report, "curve", ctx.q());
  const std::uint32_t q = ctx.q();
  const auto places = affine_places(ctx);
  const bool all_on_curve =
      std::all_of(places.begin(), places.end(), [&](const Place& p) { return on_curve(p, ctx); });
  const std::set<Place> distinct(places.begin(), places.end());
  rec.add("q^3 distinct affine places on the curve",
          all_on_curve && distinct.size() == std::size_t{q} * q * q,
          "count=" + std::to_string(distinct.size()));

  const std::int64_t group = ctx.order() - 1;
  bool exact_order = true;
  std::set<Place> covered;
  bool disjoint = true;
  bool sizes = true;
  for (const auto& p : fam.places) {
    const auto orb = orbit(p, ctx);
    const std::set<Place> orb_set(orb.begin(), orb.end());
    sizes = sizes && orb_set.size() == static_cast<std::size_t>(group);
    for (const auto& pt : orb_set) disjoint = covered.insert(pt).second && disjoint;
    for (std::int64_t j = 1; j < group; ++j) exact_order = exact_order && orb[j] != p;
    exact_order = exact_order && sigma_point(p, group, ctx) == p;
  }
  rec.add("sigma has exact order q^2-1 on orbit points", exact_order);
  rec.add("q disjoint orbits of size q^2-1", sizes && disjoint,
          "covered=" + std::to_string(covered.size()));
  bool complement_ok = true;
  std::size_t missing = 0;
  for (const auto& pt : places) {
    const bool in_orbits = covered.count(pt) > 0;
    if (!in_orbits) ++missing;
    if (in_orbits == pt.x().is_zero()) complement_ok = false;
  }
  rec.add("orbits miss exactly the q places with x = 0", complement_ok && missing == q,
          "missing=" + std::to_string(missing));

  bool fi_ok = true;
  for (std::size_t i = 1; i <= fam.size(); ++i) {
    const auto zs = zero_set(CurveFunction::f(i, fam, ctx), ctx);
    fi_ok = fi_ok && zs.size() == 1 && zs[0] == fam.place(i);
  }
  rec.add("zero_set(f_i) = {P_i}", fi_ok);
  const auto zx = zero_set(CurveFunction::x_minus(fam.a, ctx), ctx);
  rec.add("zero_set(x-a) = {P_1..P_q}", zx == fam.places);
  const auto zy = zero_set(CurveFunction::y(ctx), ctx);
  rec.add("zero_set(y) = {(0,0)}", zy.size() == 1 && zy[0] == Place::affine(ctx.zero(), ctx.zero()));

  bool poles_ok = true;
  for (int ell = 2; ell <= static_cast<int>(q); ++ell) {
    const auto h = CurveFunction::h(ell, fam, ctx);
    const std::vector<Place> expected_poles(fam.places.begin(), fam.places.begin() + (ell - 1));
    const std::vector<Place> expected_zeros(fam.places.begin() + (ell - 1), fam.places.end());
    poles_ok = poles_ok && pole_candidates(h, ctx) == expected_poles && zero_set(h, ctx) == expected_zeros;
  }
  rec.add("h_ell: affine poles P_1..P_{ell-1}, zeros P_ell..P_q", poles_ok);

  // h(sigma^j(P)) against sigma^-j(h) evaluated at P through the expanded
  // polynomial route.
  std::mt19937_64 rng(0x5eed0000 + q);
  std::vector<Place> orbit_points;
  for (const auto& p : fam.places) {
    const auto orb = orbit(p, ctx);
    orbit_points.insert(orbit_points.end(), orb.begin(), orb.end());
  }
  std::uniform_int_distribution<std::size_t> pick(0, orbit_points.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_j(0, 2 * group);
  std::uniform_int_distribution<int> pick_ell(2, static_cast<int>(q));
  std::uint64_t agreed = 0;
  std::uint64_t tested = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Place pt = orbit_points[pick(rng)];
    const std::int64_t j = pick_j(rng) - group;
    const int ell = pick_ell(rng);
    const auto lhs_place = sigma_point(pt, j, ctx);
    const auto h = CurveFunction::h(ell, fam, ctx);
    const auto lhs = h.evaluate(lhs_place, ctx);
    const auto rhs = h.sigma_power(-j, ctx).evaluate(pt, ctx);
    ++tested;
    if (lhs.has_value() == rhs.has_value() && (!lhs || *lhs == *rhs)) ++agreed;
  }
  rec.add("h(sigma^j P) = sigma^-j(h)(P) on sampled (P, j)", agreed == tested,
          std::to_string(agreed) + "/" + std::to_string(tested));
}

void check_sequences(const FieldCtx& ctx, const CollinearFamily& fam, VerifyReport& report) {
  Recorder rec(report, "sequence", ctx.q());
  const std::uint32_t q = ctx.q();
  for (int ell = 2; ell <= static_cast<int>(q); ++ell) {
    const auto s = build_sequence(ctx, fam.a, ell);
    const std::string tag = " (ell=" + std::to_string(ell) + ")";
    rec.add("length q(q^2-2)" + tag, s.size() == full_length(q), "length=" + std::to_string(s.size()));
    rec.add("all terms nonzero" + tag,
            std::none_of(s.terms.begin(), s.terms.end(), [](FieldElement v) { return v.is_zero(); }));
    const auto h = CurveFunction::h(ell, fam, ctx);
    bool recomputed = true;
    for (std::uint32_t i = 1; i <= q; ++i) {
      for (std::uint32_t j = 1; j <= q * q - 2; ++j) {
        const auto v = h.evaluate(sigma_point(fam.place(i), j, ctx), ctx);
        recomputed = recomputed && v && *v == s.terms[term_index(q, i, j) - 1];
      }
    }
    rec.add("terms match the expanded h_ell at sigma^j(P_i)" + tag, recomputed);
  }
}

void check_oracle(const FieldCtx& ctx, const CollinearFamily& fam, VerifyReport& report) {
  Recorder rec(report, "oracle", ctx.q());
  std::mt19937_64 rng(0x0eac1e);
  std::uniform_int_distribution<std::uint32_t> pick(0, ctx.order() - 1);
  std::uniform_int_distribution<int> pick_n(3, 6);
  std::uint64_t cases = 0;
  std::uint64_t agreed = 0;
  auto compare = [&](std::span<const FieldElement> t) {
    for (int m = 1; m < static_cast<int>(t.size()) && m <= 2; ++m) {
      for (int k = 1; k <= 2; ++k) {
        for (const auto& mode : {DegreeMode::per_variable(k), DegreeMode::total_degree(k)}) {
          ++cases;
          if (exists_recurrence(t, m, mode, ctx) == brute_force_oracle(t, m, mode, ctx)) ++agreed;
        }
      }
    }
  };
  for (int r = 0; r < 50; ++r) {
    std::vector<FieldElement> t(static_cast<std::size_t>(pick_n(rng)));
    for (auto& v : t) v = FieldElement{pick(rng)};
    compare(t);
  }
  for (int ell = 2; ell <= static_cast<int>(ctx.q()); ++ell) compare(build_sequence(ctx, fam.a, ell).terms);
  rec.add("exists_recurrence agrees with brute force", agreed == cases,
          std::to_string(agreed) + "/" + std::to_string(cases));
}

void check_theorems(const FieldCtx& ctx, const CollinearFamily& fam, const VerifyOptions& options,
                    VerifyReport& report) {
  Recorder rec(report, "theorem", ctx.q());
  const std::uint32_t q = ctx.q();
  for (int ell = 2; ell <= static_cast<int>(q); ++ell) {
    const auto reference = build_sequence(ctx, fam.a, ell);
    Sequence s = reference;
    const auto& c = options.corruption;
    if (c && c->q == q && c->ell == ell && c->position >= 1 && c->position <= s.size()) {
      s.terms[c->position - 1] = FieldElement{c->value % ctx.order()};
    }
    const std::string tag = " (ell=" + std::to_string(ell) + ")";
    rec.add("tested sequence equals the construction" + tag, s.terms == reference.terms);

    const int kmax = static_cast<int>(q * q) - 2;
    std::mutex mu;
    std::uint64_t points = 0;
    std::uint64_t brackets = 0;
    std::vector<std::string> n_failures;
    std::vector<std::string> l_failures;
    parallel_for(static_cast<std::size_t>(kmax), [&](std::size_t idx) {
      const int k = static_cast<int>(idx) + 1;
      for (std::size_t n = 1; n <= s.size(); ++n) {
        const auto view = std::span<const FieldElement>(s.terms).first(n);
        const BoundParams p{static_cast<std::int64_t>(n), q, k, ell};
        const auto nk = nonlinear_complexity(view, DegreeMode::per_variable(k), ctx, options.budget);
        const auto lk = nonlinear_complexity(view, DegreeMode::total_degree(k), ctx, options.budget);
        const auto nb = bound_n_new(p).ceiling();
        const auto lb = bound_l_new(p).ceiling();
        std::lock_guard lock(mu);
        points += 2;
        brackets += (nk.exact ? 0 : 1) + (lk.exact ? 0 : 1);
        const std::string at = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
        if (nk.lo < nb) n_failures.push_back(at);
        if (lk.lo < lb) l_failures.push_back(at);
      }
    });
    auto summary = [&](const std::vector<std::string>& fails) {
      std::string d = std::to_string(points / 2) + " points, " + std::to_string(brackets) + " brackets";
      if (!fails.empty()) d += ", first failure at " + fails.front();
      return d;
    };
    rec.add("N^(k)(s_n) >= ceil(N bound)" + tag, n_failures.empty(), summary(n_failures));
    rec.add("L^(k)(s_n) >= ceil(L bound)" + tag, l_failures.empty(), summary(l_failures));
  }
}

void check_remarks(std::int64_t q, VerifyReport& report) {
  Recorder rec(report, "remarks", static_cast<std::uint32_t>(q));
  const std::int64_t stride = q >= 16 ? q : 1;
  const std::int64_t n_first = q * q - 1;
  const std::int64_t n_last = q * (q * q - 2);
  std::uint64_t r1 = 0, r1_ok = 0, r2 = 0, r2_ok = 0, r3 = 0, r3_ok = 0;
  auto for_n = [&](auto&& body) {
    for (std::int64_t n = n_first; n <= n_last; n += stride) body(n);
    if ((n_last - n_first) % stride != 0) body(n_last);
  };
  for (auto k : remark_k_sample(q)) {
    for_n([&](std::int64_t n) {
      ++r1;
      r1_ok += remark1_holds(q, k, n);
      ++r3;
      r3_ok += remark3_holds(q, k, n);
    });
  }
  const std::int64_t kstep = q >= 16 ? q : 1;
  for (std::int64_t k = 1; k <= q * q - 2; k += kstep) {
    for_n([&](std::int64_t n) {
      if (!remark2_claimed(q, k, n)) return;
      ++r2;
      r2_ok += remark2_holds(q, k, n);
    });
  }
  rec.add("N1 > N2", r1 == r1_ok, std::to_string(r1_ok) + "/" + std::to_string(r1));
  rec.add("L1 > L2 on the claimed parameter set", r2 == r2_ok, std::to_string(r2_ok) + "/" + std::to_string(r2));
  rec.add("quadratic condition <=> L1 > L_nx", r3 == r3_ok, std::to_string(r3_ok) + "/" + std::to_string(r3));
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  for (auto q : options.qs) {
    const auto pe = prime_power(q);
    if (!pe) {
      report.checks.push_back({"field", "q is a prime power", q, false, "not a prime power"});
      continue;
    }
    FieldCtx ctx = FieldCtx::create(pe->first, pe->second);
    const CollinearFamily fam = collinear_family(ctx, ctx.epsilon());
    check_field(ctx, report);
    check_curve(ctx, fam, options.substitution_samples, report);
    check_sequences(ctx, fam, report);
    if (ctx.order() <= 4) check_oracle(ctx, fam, report);
    if (q <= options.theorem_max_q) check_theorems(ctx, fam, options, report);
    if (q >= 3) check_remarks(q, report);
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& os) {
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << "q=" << std::setw(2) << std::left << c.q << "  "
       << std::setw(9) << c.group << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << std::right << '\n';
  }
  os << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace hermseq
