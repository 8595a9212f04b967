// Copyright 2026 The wmh Authors
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

#include "wmh/pan_sets.hpp"

#include <stdexcept>

#include "wmh/polytopes.hpp"

namespace wmh {

void PanContext::validate() const {
  if (n < 3) throw std::invalid_argument("PanContext: need n >= 3");
  if (c_prime.size() + 2 != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("PanContext: |c'| must equal n - 2");
  }
  if (k < 1 || m < 0) throw std::invalid_argument("PanContext: need k >= 1, m >= 0");
}

bool PanContext::exceptional() const {
  // With c' = 1 both conditions coincide. For larger c' the single-cycle
  // objects stop being (a,c)-compatible only once k exceeds sum(c').
  return m == 0 && (k == n - 1 || k == c_prime.sum() + 1);
}

long low_csum(const Cycle& cycle, const IntTuple& c_prime, int n) {
  long s = 0;
  for (int e : cycle) {
    if (e <= n - 2) s += c_prime[e - 1];
  }
  return s;
}

namespace {

// Where n-1 and n sit, and whether the remaining cycles are all proper.
struct Tail {
  int low;   // cycle holding n-1
  int high;  // cycle holding n
  bool same;
  bool others_proper;
  bool low_proper;
  bool high_proper;
  long high_weight;
  long high_csum;  // sum of c' over the n-cycle, n excluded
};

Tail inspect(const Cwp& x, const PanContext& ctx) {
  Tail t{};
  t.low = x.cycle_of(ctx.n - 1);
  t.high = x.cycle_of(ctx.n);
  t.same = t.low == t.high;
  t.others_proper = true;
  for (int i = 0; i < x.num_cycles(); ++i) {
    if (i == t.low || i == t.high) continue;
    if (!is_properly_weighted(i, x, ctx.c_prime)) {
      t.others_proper = false;
      break;
    }
  }
  t.low_proper = is_properly_weighted(t.low, x, ctx.c_prime);
  t.high_proper = is_properly_weighted(t.high, x, ctx.c_prime);
  t.high_weight = x.weights()[t.high];
  t.high_csum = low_csum(x.cycles()[t.high], ctx.c_prime, ctx.n);
  return t;
}

// Every set requires cycles away from n-1 and n to be proper.
CycleCap proper_cap(const PanContext& ctx) {
  return [&ctx](const Cycle& cyc) -> long {
    for (int e : cyc) {
      if (e >= ctx.n - 1) return ctx.k;
    }
    return low_csum(cyc, ctx.c_prime, ctx.n) - 1;
  };
}

bool has_type(const Cwp& x, const PanContext& ctx, int cycles) {
  return x.type() == CwpType{ctx.n, cycles, ctx.k};
}

}  // namespace

bool in_s1(const Cwp& x, const PanContext& ctx) {
  if (!has_type(x, ctx, ctx.m + 1)) return false;
  return ctx.exceptional() || is_ac_compatible(x, ctx.c_prime);
}

bool in_s2(const Cwp& x, const PanContext& ctx) {
  if (!has_type(x, ctx, ctx.m + 1)) return false;
  const Tail t = inspect(x, ctx);
  // "cycles not containing n-1 are proper" covers the n-cycle as well
  return !t.same && t.others_proper && t.high_proper && !t.low_proper &&
         t.high_weight == t.high_csum;
}

bool in_s3(const Cwp& x, const PanContext& ctx) {
  if (ctx.m < 1 || !has_type(x, ctx, ctx.m)) return false;
  const Tail t = inspect(x, ctx);
  return !t.same && t.others_proper && !t.low_proper && t.high_weight < t.high_csum;
}

bool in_s4(const Cwp& x, const PanContext& ctx) {
  if (ctx.m <= 1 || !has_type(x, ctx, ctx.m)) return false;
  const Tail t = inspect(x, ctx);
  return t.same && !t.low_proper && t.others_proper;
}

bool in_a1(const Cwp& x, const PanContext& ctx) {
  if (!has_type(x, ctx, ctx.m + 1)) return false;
  return ctx.exceptional() || inspect(x, ctx).others_proper;
}

bool in_a2(const Cwp& x, const PanContext& ctx) {
  if (!has_type(x, ctx, ctx.m + 1)) return false;
  const Tail t = inspect(x, ctx);
  return t.others_proper && !t.same && (t.low_proper != t.high_proper);
}

bool in_a2_prime(const Cwp& x, const PanContext& ctx) {
  if (!has_type(x, ctx, ctx.m + 1)) return false;
  const Tail t = inspect(x, ctx);
  return t.others_proper && !t.same && !t.low_proper && !t.high_proper;
}

bool in_a3(const Cwp& x, const PanContext& ctx) {
  if (!has_type(x, ctx, ctx.m + 1)) return false;
  const Tail t = inspect(x, ctx);
  return t.others_proper && !t.same && !t.low_proper && t.high_weight >= t.high_csum;
}

bool in_a3_prime(const Cwp& x, const PanContext& ctx) {
  if (ctx.m + 1 <= 1 || !has_type(x, ctx, ctx.m + 1)) return false;
  const Tail t = inspect(x, ctx);
  return t.others_proper && t.same && !t.low_proper;
}

bool in_a4(const Cwp& x, const PanContext& ctx) {
  if (ctx.m < 1 || !has_type(x, ctx, ctx.m)) return false;
  const Tail t = inspect(x, ctx);
  return !t.same && !t.low_proper && t.others_proper;
}

bool in_a5(const Cwp& x, const PanContext& ctx) {
  if (ctx.m < 1 || !has_type(x, ctx, ctx.m)) return false;
  const Tail t = inspect(x, ctx);
  return t.others_proper && !t.same && !t.low_proper && t.high_weight >= t.high_csum;
}

bool in_a5_prime(const Cwp& x, const PanContext& ctx) {
  if (ctx.m <= 1 || !has_type(x, ctx, ctx.m)) return false;
  const Tail t = inspect(x, ctx);
  return t.others_proper && t.same && !t.low_proper;
}

SCounts count_s_sets(const PanContext& ctx, const EnumerationOptions& opts) {
  ctx.validate();
  SCounts out;
  out.m = ctx.m;
  out.n = ctx.n;
  out.k = ctx.k;
  out.c_prime = ctx.c_prime;
  enumerate_cwp_capped(ctx.n, ctx.m + 1, ctx.k, nullptr, proper_cap(ctx), [&](const Cwp& x) {
    if (in_s1(x, ctx)) out.s1 += 1;
    if (in_s2(x, ctx)) out.s2 += 1;
  }, opts);
  if (ctx.m >= 1) {
    enumerate_cwp_capped(ctx.n, ctx.m, ctx.k, nullptr, proper_cap(ctx), [&](const Cwp& x) {
      if (in_s3(x, ctx)) out.s3 += 1;
      if (in_s4(x, ctx)) out.s4 += 1;
    }, opts);
  }
  return out;
}

BigInt pan_coefficient_closed(const PanContext& ctx) {
  ctx.validate();
  const auto poly = ehrhart_pan5term_closed(ctx.k, ctx.c_prime.concat(IntTuple{1})).poly;
  const auto scaled = scaled_integer_coeffs(poly, ctx.n);
  return static_cast<std::size_t>(ctx.m) < scaled.size() ? scaled[ctx.m] : BigInt(0);
}

std::array<BigInt, 5> a_terms_formula(const PanContext& ctx) {
  ctx.validate();
  const int n = ctx.n;
  const int k = ctx.k;
  const int m = ctx.m;
  const int max_i = std::min(k - 1, n - 2);

  auto pw = [](long base, int e) {
    return e < 0 ? BigInt(0) : ipow(BigInt(base), static_cast<unsigned>(e));
  };
  // sum_i sign(i) sum_{v=0}^{v_max} (k - v - off)^e P^deg_{-i+lo, n-1-i+hi} rho(v)
  auto sum = [&](int v_max, int off, int e, int deg, int lo, int hi, bool flip) {
    BigInt s = 0;
    if (e < 0 || deg < 0) return s;
    for (int i = 0; i <= max_i; ++i) {
      for (int v = 0; v <= v_max; ++v) {
        const BigInt r = rho(ctx.c_prime, i, v);
        if (r == 0) continue;
        BigInt term = pw(k - v - off, e) * elem_sym_range(deg, -i + lo, n - 1 - i + hi) * r;
        if ((i % 2 == 1) != flip) s -= term; else s += term;
      }
    }
    return s;
  };

  std::array<BigInt, 5> a;
  a[0] = sum(k - 1, 0, m, n - 1 - m, 1, 0, false);
  a[1] = 2 * sum(k - 2, 1, m, n - 1 - m, 0, -1, true);
  a[2] = sum(k - 2, 1, m, n - 1 - m, -1, -2, false);
  if (m >= 1) {
    a[3] = sum(k - 2, 1, m - 1, n - m, 0, -1, true);
    a[4] = sum(k - 2, 1, m - 1, n - m, -1, -2, false);
  }
  return a;
}

ACounts count_a_sets(const PanContext& ctx, const EnumerationOptions& opts) {
  ctx.validate();
  ACounts out;
  enumerate_cwp_capped(ctx.n, ctx.m + 1, ctx.k, nullptr, proper_cap(ctx), [&](const Cwp& x) {
    if (in_a1(x, ctx)) out.A1 += 1;
    if (in_a2(x, ctx)) out.A2 += 1;
    if (in_a2_prime(x, ctx)) out.A2p += 1;
    if (in_a3(x, ctx)) out.A3 += 1;
    if (in_a3_prime(x, ctx)) out.A3p += 1;
  }, opts);
  if (ctx.m >= 1) {
    enumerate_cwp_capped(ctx.n, ctx.m, ctx.k, nullptr, proper_cap(ctx), [&](const Cwp& x) {
      if (in_a4(x, ctx)) out.A4 += 1;
      if (in_a5(x, ctx)) out.A5 += 1;
      if (in_a5_prime(x, ctx)) out.A5p += 1;
    }, opts);
  }
  out.formula = a_terms_formula(ctx);
  out.from_sets = {out.A1, -out.A2 - 2 * out.A2p, out.A3 - out.A3p, -out.A4,
                   out.A5 - out.A5p};
  return out;
}

}  // namespace wmh
