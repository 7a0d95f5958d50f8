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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <span>
#include <sstream>

#include "hermseq/bounds.hpp"
#include "hermseq/parallel.hpp"
#include "hermseq/sequence_builder.hpp"
#include "hermseq/verify.hpp"

namespace hermseq::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

FieldCtx field_from(const RunConfig& cfg) {
  if (cfg.p == 0) throw UsageError("--p is required");
  return FieldCtx::create(cfg.p, cfg.e, cfg.modulus);
}

FieldElement a_from(const RunConfig& cfg, const FieldCtx& ctx) {
  return cfg.a.empty() ? ctx.epsilon() : ctx.parse(cfg.a);
}

int ell_from(const RunConfig& cfg, const FieldCtx& ctx) {
  return cfg.ell.value_or(static_cast<int>(ctx.q()));
}

DegreeMode mode_from(const RunConfig& cfg, int k) {
  if (cfg.mode == "per-variable") return DegreeMode::per_variable(k);
  if (cfg.mode == "total-degree") return DegreeMode::total_degree(k);
  throw UsageError("--mode must be per-variable or total-degree");
}

void check_within(const IntRange& r, std::int64_t lo, std::int64_t hi, const char* flag) {
  if (r.lo < lo || r.hi > hi) {
    throw UsageError(std::string(flag) + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

void cmd_sequence(const RunConfig& cfg, std::ostream& out) {
  const FieldCtx ctx = field_from(cfg);
  const Sequence s = build_sequence(ctx, a_from(cfg, ctx), ell_from(cfg, ctx));
  const std::uint32_t q = ctx.q();
  out << "index,i,j,value\n";
  for (std::uint32_t i = 1; i <= q; ++i) {
    for (std::uint32_t j = 1; j <= q * q - 2; ++j) {
      const auto idx = term_index(q, i, j);
      out << idx << ',' << i << ',' << j << ',' << ctx.to_string(s.terms[idx - 1]) << '\n';
    }
  }
}

void cmd_complexity(const RunConfig& cfg, std::ostream& out) {
  const FieldCtx ctx = field_from(cfg);
  std::vector<FieldElement> terms;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot read " + cfg.input);
    terms = read_sequence_csv(in, ctx);
  } else {
    terms = build_sequence(ctx, a_from(cfg, ctx), ell_from(cfg, ctx)).terms;
  }
  if (terms.empty()) throw UsageError("empty input sequence");
  const IntRange n = cfg.n.value_or(IntRange{1, static_cast<std::int64_t>(terms.size())});
  const IntRange k = cfg.k.value_or(IntRange{1, 1});
  check_within(n, 1, static_cast<std::int64_t>(terms.size()), "--n");
  check_within(k, 1, std::int64_t{1} << 20, "--k");
  if (cfg.budget < 1) throw UsageError("--budget must be at least 1");
  mode_from(cfg, 1);

  struct Cell {
    std::int64_t n;
    int k;
  };
  std::vector<Cell> cells;
  for (auto nn = n.lo; nn <= n.hi; ++nn) {
    for (auto kk = k.lo; kk <= k.hi; ++kk) cells.push_back({nn, static_cast<int>(kk)});
  }
  std::vector<ComplexityResult> results(cells.size());
  const std::span<const FieldElement> all(terms);
  parallel_for(cells.size(), [&](std::size_t c) {
    results[c] = nonlinear_complexity(all.first(static_cast<std::size_t>(cells[c].n)),
                                      mode_from(cfg, cells[c].k), ctx, cfg.budget);
  });
  out << "n,k,mode,result_kind,value_or_lo,hi\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& r = results[c];
    out << cells[c].n << ',' << cells[c].k << ',' << cfg.mode << ',' << (r.exact ? "exact" : "bracket")
        << ',' << r.lo << ',' << r.hi << '\n';
  }
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p == 0) throw UsageError("--p is required");
  std::int64_t q = 1;
  for (std::uint32_t i = 0; i < cfg.e; ++i) q *= cfg.p;
  const std::int64_t ell = cfg.ell.value_or(static_cast<int>(q));
  const IntRange n = cfg.n.value_or(IntRange{1, q * (q * q - 2)});
  const IntRange k = cfg.k.value_or(IntRange{1, 1});
  out << "n,k,ell,N_new,L_new,N_nx,L_nx,N_gor,L_gor\n";
  for (auto nn = n.lo; nn <= n.hi; ++nn) {
    for (auto kk = k.lo; kk <= k.hi; ++kk) {
      const BoundParams bp{nn, q, kk, ell};
      constexpr auto fl = RangePolicy::kFormulaLevel;
      out << nn << ',' << kk << ',' << ell << ',' << bound_n_new(bp).decimal() << ','
          << bound_l_new(bp).decimal() << ',' << bound_n_nx(bp, fl).decimal() << ','
          << bound_l_nx(bp, fl).decimal() << ',' << bound_n_gor(bp, fl).decimal() << ','
          << bound_l_gor(bp, fl).decimal() << '\n';
    }
  }
}

void cmd_figures(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t q = 32;
  std::int64_t k = 0;
  bool n_curve = true;
  if (cfg.preset == "fig1") {
    k = 5;
  } else if (cfg.preset == "fig2") {
    k = 20;
    n_curve = false;
  } else {
    throw UsageError("--preset must be fig1 or fig2");
  }
  const IntRange n = cfg.n.value_or(IntRange{q * q - 1, q * (q * q - 2)});
  const auto rows = comparison_sweep(q, k, q, n.lo, n.hi);
  out << (n_curve ? "n,N1,N2,N1_exact,N2_exact\n" : "n,L1,L2,L1_exact,L2_exact\n");
  for (const auto& row : rows) {
    const auto& first = n_curve ? row.n1 : row.l1;
    const auto& second = n_curve ? row.n2 : row.l2;
    out << row.n << ',' << first.decimal() << ',' << second.decimal() << ',' << rational_text(first.value)
        << ',' << rational_text(second.value) << '\n';
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.qs = cfg.qs;
  options.theorem_max_q = cfg.theorem_max_q;
  options.budget = cfg.budget;
  options.substitution_samples = cfg.samples;
  if (!cfg.corrupt.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(cfg.corrupt);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 4) throw UsageError("--corrupt expects q:ell:position:value");
    options.corruption = InjectedCorruption{static_cast<std::uint32_t>(parse_int(parts[0])),
                                            static_cast<int>(parse_int(parts[1])),
                                            static_cast<std::size_t>(parse_int(parts[2])),
                                            static_cast<std::uint32_t>(parse_int(parts[3]))};
  }
  for (auto q : options.qs) {
    if (!prime_power(q) || std::uint64_t{q} * q > (std::uint64_t{1} << 22)) {
      throw UsageError("--q values must be prime powers with q^2 <= 2^22");
    }
  }
  const VerifyReport report = run_verification(options);
  print_report(report, out);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

void add_field_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "Characteristic");
  sub->add_option("--e", cfg.e, "q = p^e")->capture_default_str();
  sub->add_option("--modulus", cfg.modulus, "Modulus coefficients, low degree first")->delimiter(',');
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  IntRange r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, colon));
    r.hi = parse_int(text.substr(colon + 1));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::vector<FieldElement> read_sequence_csv(std::istream& in, const FieldCtx& ctx) {
  std::string line;
  if (!std::getline(in, line) || line != "index,i,j,value") {
    throw std::invalid_argument("sequence CSV must start with 'index,i,j,value'");
  }
  std::vector<FieldElement> terms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cut = line.rfind(',');
    if (cut == std::string::npos) throw std::invalid_argument("malformed row: " + line);
    const auto index = parse_int(line.substr(0, line.find(',')));
    if (index != static_cast<std::int64_t>(terms.size()) + 1) {
      throw std::invalid_argument("rows out of order at index " + std::to_string(index));
    }
    terms.push_back(ctx.parse(line.substr(cut + 1)));
  }
  return terms;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string k_text;
  std::string k_range;
  std::string n_text;
  std::string n_range;

  CLI::App app{"Sequences from collinear places of the Hermitian curve", "hermseq"};
  app.require_subcommand(1);

  auto* seq = app.add_subcommand("sequence", "Emit the sequence as index,i,j,value");
  add_field_flags(seq, cfg);
  seq->add_option("--a", cfg.a, "Nonzero x-coordinate of the collinear places (default: epsilon)");
  seq->add_option("--ell", cfg.ell, "2 <= ell <= q (default: q)");

  auto* cx = app.add_subcommand("complexity", "Nonlinear complexity of sequence prefixes");
  add_field_flags(cx, cfg);
  cx->add_option("--a", cfg.a, "Nonzero x-coordinate (default: epsilon)");
  cx->add_option("--ell", cfg.ell, "2 <= ell <= q (default: q)");
  cx->add_option("--input", cfg.input, "Read terms from a sequence CSV instead of building them");
  cx->add_option("--mode", cfg.mode, "per-variable or total-degree")->capture_default_str();
  cx->add_option("--budget", cfg.budget, "Monomial budget per existence check")->capture_default_str();

  auto* bd = app.add_subcommand("bounds", "Evaluate all six bound formulas");
  add_field_flags(bd, cfg);
  bd->add_option("--ell", cfg.ell, "2 <= ell <= q (default: q)");

  auto* fg = app.add_subcommand("figures", "Comparison curves at q = 32");
  fg->add_option("--preset", cfg.preset, "fig1 (N, k=5) or fig2 (L, k=20)")->required();

  auto* vf = app.add_subcommand("verify", "Run the invariant suite");
  vf->add_option("--q", cfg.qs, "Comma-separated q values")->delimiter(',')->capture_default_str();
  vf->add_option("--theorem-max-q", cfg.theorem_max_q, "Largest q for the exact complexity grid")
      ->capture_default_str();
  vf->add_option("--budget", cfg.budget, "Monomial budget per existence check")->capture_default_str();
  vf->add_option("--samples", cfg.samples, "Sampled (P, j) pairs for the substitution identity")
      ->capture_default_str();
  vf->add_option("--corrupt", cfg.corrupt, "Overwrite one term before the theorem checks: q:ell:position:value");

  for (auto* sub : {cx, bd}) {
    auto* k1 = sub->add_option("--k", k_text, "Single k");
    sub->add_option("--k-range", k_range, "Inclusive k range lo:hi")->excludes(k1);
    auto* n1 = sub->add_option("--n", n_text, "Single prefix length n");
    sub->add_option("--n-range", n_range, "Inclusive n range lo:hi")->excludes(n1);
  }
  fg->add_option("--n-range", n_range, "Restrict n (default: q^2-1 to q(q^2-2))");
  for (auto* sub : {seq, cx, bd, fg, vf}) sub->add_option("--out", cfg.out, "Write output to a file");

  std::vector<const char*> argv{"hermseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!k_text.empty()) cfg.k = parse_range(k_text);
    if (!k_range.empty()) cfg.k = parse_range(k_range);
    if (!n_text.empty()) cfg.n = parse_range(n_text);
    if (!n_range.empty()) cfg.n = parse_range(n_range);

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw UsageError("cannot write " + cfg.out);
      sink = &file;
    }
    int code = kExitOk;
    if (seq->parsed()) cmd_sequence(cfg, *sink);
    if (cx->parsed()) cmd_complexity(cfg, *sink);
    if (bd->parsed()) cmd_bounds(cfg, *sink);
    if (fg->parsed()) cmd_figures(cfg, *sink);
    if (vf->parsed()) code = cmd_verify(cfg, *sink);
    sink->flush();
    return code;
  } catch (const std::invalid_argument& e) {
    // FieldError, BoundError and malformed flags all land here.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hermseq::cli
