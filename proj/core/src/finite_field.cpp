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

#include "hermseq/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hermseq {
namespace {

constexpr std::uint32_t kMaxOrder = 1u << 22;
constexpr std::uint32_t kAddTableMaxOrder = 1024;

using Poly = std::vector<std::uint32_t>;  // low degree first, over F_p

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and a != 0 mod p.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t n = p - 2; n > 0; n >>= 1) {
    if (n & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - (lead * g[i]) % p) % p;
    }
    trim(f);
  }
  return f;
}

// Product of two reduced residues modulo the monic modulus.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), modulus, p);
}

Poly powmod(Poly base, std::uint64_t n, const Poly& modulus, std::uint32_t p) {
  Poly result{1};
  while (n > 0) {
    if (n & 1) result = mulmod(result, base, modulus, p);
    base = mulmod(base, base, modulus, p);
    n >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Digits of an index; the constant coefficient is the most significant digit.
Poly index_to_poly(std::uint32_t index, std::uint32_t p, std::uint32_t degree) {
  Poly c(degree, 0);
  for (std::uint32_t i = degree; i-- > 0;) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

std::uint32_t poly_to_index(const Poly& c, std::uint32_t p, std::uint32_t degree) {
  std::uint32_t index = 0;
  for (std::uint32_t i = 0; i < degree; ++i) {
    index = index * p + (i < c.size() ? c[i] : 0);
  }
  return index;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++e;
  return std::pair{static_cast<std::uint32_t>(factors[0]), e};
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t inv_lead = inv_mod_p(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv_lead % p);
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldCtx FieldCtx::create(std::uint32_t p, std::uint32_t e,
                          std::span<const std::uint32_t> modulus) {
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (p > 255) throw FieldError("characteristic above 255 is not supported");
  if (e < 1) throw FieldError("extension degree e must be at least 1");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.degree_ = 2 * e;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  if (q * q > kMaxOrder) throw FieldError("field of order q^2 = " + std::to_string(q * q) + " is too large");
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.order_ = static_cast<std::uint32_t>(q * q);
  const std::uint32_t d = ctx.degree_;

  Poly mod;
  if (!modulus.empty()) {
    mod.assign(modulus.begin(), modulus.end());
    for (auto c : mod) {
      if (c >= p) throw FieldError("modulus coefficient out of range [0, p)");
    }
    trim(mod);
    if (mod.size() != d + 1) {
      throw FieldError("modulus must have degree 2e = " + std::to_string(d));
    }
    const std::uint32_t inv_lead = inv_mod_p(mod.back(), p);
    for (auto& c : mod) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv_lead % p);
    if (!is_irreducible_mod_p(mod, p)) throw FieldError("modulus is reducible over F_p");
  } else {
    // Monic candidates in lexicographic order of (c_0, ..., c_{d-1}).
    for (std::uint32_t idx = 0; idx < ctx.order_; ++idx) {
      Poly cand = index_to_poly(idx, p, d);
      cand.push_back(1);
      if (is_irreducible_mod_p(cand, p)) {
        mod = std::move(cand);
        break;
      }
    }
    if (mod.empty()) throw FieldError("no irreducible modulus found");
  }
  ctx.modulus_ = mod;

  const std::uint64_t group = ctx.order_ - 1;
  const auto factors = prime_factors(group);
  std::optional<Poly> eps;
  for (std::uint32_t idx = 1; idx < ctx.order_ && !eps; ++idx) {
    Poly cand = index_to_poly(idx, p, d);
    trim(cand);
    bool primitive = true;
    for (auto r : factors) {
      Poly t = powmod(cand, group / r, mod, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) eps = cand;
  }
  if (!eps) throw FieldError("no primitive element found");

  ctx.exp_.resize(group);
  ctx.log_.assign(ctx.order_, 0);
  Poly cur{1};
  for (std::uint64_t i = 0; i < group; ++i) {
    const std::uint32_t idx = poly_to_index(cur, p, d);
    ctx.exp_[i] = FieldElement{idx};
    ctx.log_[idx] = static_cast<std::uint32_t>(i);
    cur = mulmod(cur, *eps, mod, p);
  }
  ctx.epsilon_ = FieldElement{poly_to_index(*eps, p, d)};
  ctx.one_ = ctx.exp_[0];
  ctx.z_ = FieldElement{poly_to_index(Poly{0, 1}, p, d)};

  ctx.digits_.resize(std::size_t{ctx.order_} * d);
  for (std::uint32_t idx = 0; idx < ctx.order_; ++idx) {
    const Poly c = index_to_poly(idx, p, d);
    std::copy(c.begin(), c.end(), ctx.digits_.begin() + std::size_t{idx} * d);
  }
  ctx.neg_table_.resize(ctx.order_);
  for (std::uint32_t idx = 0; idx < ctx.order_; ++idx) {
    ctx.neg_table_[idx] = ctx.add_digits(FieldElement{0}, FieldElement{idx}, true);
  }
  if (ctx.order_ <= kAddTableMaxOrder) {
    ctx.add_table_.resize(std::size_t{ctx.order_} * ctx.order_);
    for (std::uint32_t a = 0; a < ctx.order_; ++a) {
      for (std::uint32_t b = 0; b < ctx.order_; ++b) {
        ctx.add_table_[std::size_t{a} * ctx.order_ + b] =
            ctx.add_digits(FieldElement{a}, FieldElement{b}, false);
      }
    }
  }
  return ctx;
}

FieldElement FieldCtx::add_digits(FieldElement a, FieldElement b, bool subtract) const {
  const std::uint8_t* da = &digits_[std::size_t{a.index()} * degree_];
  const std::uint8_t* db = &digits_[std::size_t{b.index()} * degree_];
  std::uint32_t index = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    const std::uint32_t c = subtract ? (da[i] + p_ - db[i]) % p_ : (da[i] + db[i]) % p_;
    index = index * p_ + c;
  }
  return FieldElement{index};
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a.index()} * order_ + b.index()];
  return add_digits(a, b, false);
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldCtx::neg(FieldElement a) const { return neg_table_[a.index()]; }

FieldElement FieldCtx::inv(FieldElement a) const {
  if (a.is_zero()) throw FieldError("inverse of zero");
  const std::uint32_t l = log_[a.index()];
  return exp_[l == 0 ? 0 : (order_ - 1) - l];
}

FieldElement FieldCtx::pow(FieldElement a, std::int64_t n) const {
  if (n == 0) return one_;
  if (a.is_zero()) {
    if (n < 0) throw FieldError("negative power of zero");
    return FieldElement{0};
  }
  const std::int64_t group = order_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a.index()]) * (n % group)) % group;
  if (r < 0) r += group;
  return exp_[static_cast<std::size_t>(r)];
}

FieldElement FieldCtx::epsilon_pow(std::int64_t n) const {
  const std::int64_t group = order_ - 1;
  std::int64_t r = n % group;
  if (r < 0) r += group;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint64_t FieldCtx::multiplicative_order(FieldElement a) const {
  if (a.is_zero()) throw FieldError("zero has no multiplicative order");
  const std::uint64_t group = order_ - 1;
  return group / std::gcd<std::uint64_t>(group, log_[a.index()]);
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElement a) const {
  const auto* d = &digits_[std::size_t{a.index()} * degree_];
  return std::vector<std::uint32_t>(d, d + degree_);
}

FieldElement FieldCtx::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != degree_) throw FieldError("coefficient vector must have length 2e");
  std::uint32_t index = 0;
  for (auto v : c) {
    if (v >= p_) throw FieldError("coefficient out of range [0, p)");
    index = index * p_ + v;
  }
  return FieldElement{index};
}

FieldElement FieldCtx::from_prime(std::uint32_t c) const {
  std::vector<std::uint32_t> v(degree_, 0);
  v[0] = c % p_;
  return from_coeffs(v);
}

std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = FieldElement{i};
  return out;
}

std::string FieldCtx::to_string(FieldElement a) const {
  std::string out;
  const auto* d = &digits_[std::size_t{a.index()} * degree_];
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (i) out.push_back(':');
    out += std::to_string(d[i]);
  }
  return out;
}

FieldElement FieldCtx::parse(std::string_view text) const {
  std::vector<std::uint32_t> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(':', pos), text.size());
    const auto part = text.substr(pos, next - pos);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw FieldError("malformed field element '" + std::string(text) + "'");
    }
    c.push_back(v);
    pos = next + 1;
  }
  return from_coeffs(c);
}

FieldElement rel_trace(FieldElement b, const FieldCtx& ctx) {
  return ctx.add(ctx.pow(b, ctx.q()), b);
}

FieldElement rel_norm(FieldElement a, const FieldCtx& ctx) {
  return ctx.pow(a, std::int64_t{ctx.q()} + 1);
}

std::vector<FieldElement> hermitian_fiber(FieldElement a, const FieldCtx& ctx) {
  const std::uint32_t d = ctx.degree();
  const std::uint32_t p = ctx.p();

  // Augmented matrix [T | rhs] over F_p; column i of T is the trace of z^i.
  std::vector<std::vector<std::uint32_t>> m(d, std::vector<std::uint32_t>(d + 1, 0));
  for (std::uint32_t i = 0; i < d; ++i) {
    std::vector<std::uint32_t> unit(d, 0);
    unit[i] = 1;
    const auto image = ctx.coeffs(rel_trace(ctx.from_coeffs(unit), ctx));
    for (std::uint32_t r = 0; r < d; ++r) m[r][i] = image[r];
  }
  const auto rhs = ctx.coeffs(rel_norm(a, ctx));
  for (std::uint32_t r = 0; r < d; ++r) m[r][d] = rhs[r];

  std::vector<int> pivot_col;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < d && row < d; ++col) {
    std::uint32_t sel = row;
    while (sel < d && m[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(m[sel], m[row]);
    const std::uint32_t inv = inv_mod_p(m[row][col], p);
    for (auto& v : m[row]) v = v * inv % p;
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint32_t f = m[r][col];
      for (std::uint32_t c = 0; c <= d; ++c) m[r][c] = (m[r][c] + p * p - f * m[row][c]) % p;
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::uint32_t r = row; r < d; ++r) {
    if (m[r][d] != 0) throw std::logic_error("hermitian_fiber: inconsistent trace system");
  }

  std::vector<bool> is_pivot(d, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::uint32_t> free_cols;
  for (std::uint32_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  std::vector<FieldElement> out;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < free_cols.size(); ++i) combos *= p;
  for (std::uint64_t t = 0; t < combos; ++t) {
    std::vector<std::uint32_t> x(d, 0);
    std::uint64_t s = t;
    for (auto fc : free_cols) {
      x[fc] = static_cast<std::uint32_t>(s % p);
      s /= p;
    }
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      std::uint32_t v = m[r][d];
      for (auto fc : free_cols) v = (v + p * p - m[r][fc] * x[fc]) % p;
      x[pivot_col[r]] = v;
    }
    out.push_back(ctx.from_coeffs(x));
  }
  std::sort(out.begin(), out.end());
  if (out.size() != ctx.q()) throw std::logic_error("hermitian_fiber: expected q solutions");
  return out;
}

}  // namespace hermseq
