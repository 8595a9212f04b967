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

#include "wmh/polytopes.hpp"

#include <stdexcept>
#include <vector>

namespace wmh {

PolytopeSpec::PolytopeSpec(int k, IntTuple a, IntTuple c)
    : k_(k), a_(std::move(a)), c_(std::move(c)), n_(static_cast<int>(a_.sum())) {
  if (k_ < 1) throw std::invalid_argument("PolytopeSpec: k must be >= 1");
  if (a_.empty()) throw std::invalid_argument("PolytopeSpec: a must be nonempty");
  if (a_.size() != c_.size()) {
    throw std::invalid_argument("PolytopeSpec: a and c must have equal length");
  }
}

PolytopeSpec PolytopeSpec::hypersimplex(int k, int n) {
  if (n < 1) throw std::invalid_argument("hypersimplex: n must be >= 1");
  return {k, IntTuple::repeat(n, 1), IntTuple::repeat(n, 1)};
}

PolytopeSpec PolytopeSpec::r_kc(int k, IntTuple c) {
  const std::size_t n = c.size();
  return {k, IntTuple::repeat(n, 1), std::move(c)};
}

PolytopeSpec PolytopeSpec::panhandle(int k, int r, int n) {
  if (r < 0 || r >= n) throw std::invalid_argument("panhandle: need 0 <= r < n");
  return {k, IntTuple::repeat(r, 1).concat(IntTuple{n - r}),
          IntTuple::repeat(r + 1, 1)};
}

PolytopeSpec PolytopeSpec::pan_target(int k, int n, const IntTuple& c_prime) {
  if (n < 2 || c_prime.size() != static_cast<std::size_t>(n - 2)) {
    throw std::invalid_argument("pan_target: c' must have length n - 2");
  }
  return {k, IntTuple::repeat(n - 2, 1).concat(IntTuple{2}), c_prime.concat(IntTuple{1})};
}

bool PolytopeSpec::is_pan_shape() const {
  if (n_ < 2 || a_.size() != static_cast<std::size_t>(n_ - 1)) return false;
  for (std::size_t i = 0; i + 1 < a_.size(); ++i) {
    if (a_[i] != 1) return false;
  }
  return a_[a_.size() - 1] == 2;
}

std::string PolytopeSpec::to_string() const {
  return "k=" + std::to_string(k_) + " a=(" + a_.to_string() + ") c=(" +
         c_.to_string() + ")";
}

std::string_view to_string(EhrhartMethod m) {
  switch (m) {
    case EhrhartMethod::brute_interp: return "brute_interp";
    case EhrhartMethod::genfun_interp: return "genfun_interp";
    case EhrhartMethod::closed_hypersimplex: return "closed_hypersimplex";
    case EhrhartMethod::closed_rkc: return "closed_rkc";
    case EhrhartMethod::closed_pan5term: return "closed_pan5term";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Counting

namespace {

void require_positive_t(long t) {
  if (t < 1) throw std::invalid_argument("dilation t must be >= 1");
}

struct BlockWalk {
  const PolytopeSpec& spec;
  long t;
  std::vector<long> suffix_capacity;  // sum of c_j t over blocks j >= i
  std::vector<std::vector<BigInt>> stars;  // stars[i][u] = C(u + a_i - 1, a_i - 1)
  // memo[i][s]: points of blocks i.. summing to s; -1 when not yet known
  std::vector<std::vector<BigInt>> memo;

  const BigInt& walk(std::size_t block, long remaining) {
    BigInt& slot = memo[block][remaining];
    if (slot >= 0) return slot;
    if (block == spec.blocks()) {
      slot = remaining == 0 ? 1 : 0;
      return slot;
    }
    const long cap = spec.c()[block] * t;
    const long lo = std::max(0L, remaining - suffix_capacity[block + 1]);
    const long hi = std::min(cap, remaining);
    BigInt total = 0;
    for (long u = lo; u <= hi; ++u) total += stars[block][u] * walk(block + 1, remaining - u);
    slot = std::move(total);
    return slot;
  }
};

}  // namespace

BigInt lattice_count(const PolytopeSpec& spec, long t) {
  require_positive_t(t);
  const std::size_t r = spec.blocks();
  BlockWalk bw{spec, t, std::vector<long>(r + 1, 0), {}, {}};
  for (std::size_t i = r; i-- > 0;) {
    bw.suffix_capacity[i] = bw.suffix_capacity[i + 1] + spec.c()[i] * t;
  }
  const long total = static_cast<long>(spec.k()) * t;
  if (total > bw.suffix_capacity[0]) return 0;
  bw.stars.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const long cap = spec.c()[i] * t;
    for (long u = 0; u <= cap; ++u) {
      bw.stars[i].push_back(binomial(u + spec.a()[i] - 1, spec.a()[i] - 1));
    }
  }
  bw.memo.assign(r + 1, std::vector<BigInt>(total + 1, BigInt(-1)));
  return bw.walk(0, total);
}

BigInt lattice_count_raw(const PolytopeSpec& spec, long t) {
  require_positive_t(t);
  if (static_cast<long>(spec.n()) * t > 24) {
    throw std::invalid_argument("lattice_count_raw: limited to n * t <= 24");
  }
  // block_of[j] is the block index of coordinate j.
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < spec.blocks(); ++b) {
    for (int j = 0; j < spec.a()[b]; ++j) block_of.push_back(b);
  }
  const long total = static_cast<long>(spec.k()) * t;
  std::vector<long> block_sum(spec.blocks(), 0);
  std::uint64_t count = 0;
  const std::size_t n = block_of.size();

  auto rec = [&](auto&& self, std::size_t j, long sum) -> void {
    if (j == n) {
      if (sum == total) ++count;
      return;
    }
    const std::size_t b = block_of[j];
    const long cap = spec.c()[b] * t;
    for (long x = 0; sum + x <= total && block_sum[b] + x <= cap; ++x) {
      block_sum[b] += x;
      self(self, j + 1, sum + x);
      block_sum[b] -= x;
    }
  };
  rec(rec, 0, 0);
  return BigInt(static_cast<unsigned long>(count));
}

TruncSeries genfun_factor(int a, int c, long t, std::size_t bound) {
  TruncSeries s(bound);
  const long top = static_cast<long>(c) * t;
  for (long j = 0; j <= top && j <= static_cast<long>(bound); ++j) {
    s[j] = binomial(j + a - 1, a - 1);
  }
  return s;
}

TruncSeries genfun_factor_derivative(int a, int c, long t, std::size_t bound) {
  // Differentiating a-1 times consumes a-1 orders of the series, so the
  // geometric quotient is built with that much headroom before truncating.
  const std::size_t work = bound + static_cast<std::size_t>(a - 1);
  const std::size_t expo = static_cast<std::size_t>(c * t + a);
  TruncSeries numer = TruncSeries::monomial(work, 0, 1) -
                      TruncSeries::monomial(work, expo, 1);
  TruncSeries s = numer.divided_by_one_minus_x();
  for (int i = 0; i < a - 1; ++i) s = s.derivative();
  return s.divided_exact(factorial(a - 1)).truncated(bound);
}

BigInt ehrhart_genfun_count(const PolytopeSpec& spec, long t, FactorForm form) {
  require_positive_t(t);
  const std::size_t bound = static_cast<std::size_t>(spec.k()) * t;
  TruncSeries prod = TruncSeries::monomial(bound, 0, 1);
  for (std::size_t i = 0; i < spec.blocks(); ++i) {
    const int a = spec.a()[i];
    const int c = spec.c()[i];
    prod *= form == FactorForm::binomial_series ? genfun_factor(a, c, t, bound)
                                                : genfun_factor_derivative(a, c, t, bound);
  }
  return prod[bound];
}

BigInt count_with(const PolytopeSpec& spec, long t, Counter counter) {
  return counter == Counter::brute ? lattice_count(spec, t)
                                   : ehrhart_genfun_count(spec, t);
}

bool is_empty(const PolytopeSpec& spec) { return lattice_count(spec, 1) == 0; }

std::optional<EhrhartResult> ehrhart_interpolated(const PolytopeSpec& spec,
                                                  Counter counter) {
  if (count_with(spec, 1, counter) == 0) return std::nullopt;
  const int n = spec.n();
  std::vector<std::pair<long, BigInt>> points;
  points.emplace_back(0, BigInt(1));
  for (long t = 1; t <= n - 1; ++t) points.emplace_back(t, count_with(spec, t, counter));
  UniPoly poly = lagrange_interpolate(points);

  const BigInt check = count_with(spec, n, counter);
  if (poly.eval(n) != Rational(check)) {
    throw std::logic_error("ehrhart_interpolated: count at t=" + std::to_string(n) +
                           " disagrees with interpolant for " + spec.to_string());
  }
  return EhrhartResult{std::move(poly), counter == Counter::brute
                                            ? EhrhartMethod::brute_interp
                                            : EhrhartMethod::genfun_interp};
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

UniPoly monomial(const Rational& c, std::size_t e) {
  std::vector<Rational> v(e + 1);
  v[e] = c;
  return UniPoly(std::move(v));
}

// base^m with 0^0 = 1; zero for negative exponents.
BigInt power(long base, long m) {
  if (m < 0) return 0;
  return ipow(BigInt(base), static_cast<unsigned>(m));
}

}  // namespace

UniPoly hypersimplex_binomial_form(int k, int n) {
  UniPoly acc;
  for (int i = 0; i <= k - 1; ++i) {
    const UniPoly arg = UniPoly::linear(k - i, -i + n - 1);
    UniPoly term = binomial_poly(arg, n - 1) * Rational(binomial(n, i));
    if (i % 2) acc -= term; else acc += term;
  }
  return acc;
}

UniPoly hypersimplex_power_form(int k, int n) {
  std::vector<Rational> coeffs(n);
  for (int m = 0; m <= n - 1; ++m) {
    BigInt s = 0;
    for (int i = 0; i <= k - 1; ++i) {
      BigInt term = binomial(n, i) * power(k - i, m) *
                    elem_sym_range(n - 1 - m, -i + 1, n - 1 - i);
      if (i % 2) s -= term; else s += term;
    }
    coeffs[m] = s;
  }
  return UniPoly(std::move(coeffs)) * make_rational(1, factorial(n - 1));
}

EhrhartResult ehrhart_hypersimplex_closed(int k, int n) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw std::invalid_argument("ehrhart_hypersimplex_closed: need 1 <= k <= n-1, got k=" +
                                std::to_string(k) + " n=" + std::to_string(n));
  }
  UniPoly binom_form = hypersimplex_binomial_form(k, n);
  UniPoly power_form = hypersimplex_power_form(k, n);
  if (binom_form != power_form) {
    throw std::logic_error("hypersimplex closed forms disagree: " + binom_form.to_string() +
                           " vs " + power_form.to_string());
  }
  return {std::move(binom_form), EhrhartMethod::closed_hypersimplex};
}

UniPoly rkc_binomial_form(int k, const IntTuple& c) {
  const int n = static_cast<int>(c.size());
  UniPoly acc;
  for (int i = 0; i <= std::min(k - 1, n); ++i) {
    for (int v = 0; v <= k - 1; ++v) {
      const BigInt r = rho(c, i, v);
      if (r == 0) continue;
      UniPoly term = binomial_poly(UniPoly::linear(k - v, n - 1 - i), n - 1) * Rational(r);
      if (i % 2) acc -= term; else acc += term;
    }
  }
  return acc;
}

UniPoly rkc_power_form(int k, const IntTuple& c) {
  const int n = static_cast<int>(c.size());
  std::vector<Rational> coeffs(n);
  for (int m = 0; m <= n - 1; ++m) {
    BigInt s = 0;
    for (int v = 0; v <= k; ++v) {
      const BigInt pw = power(k - v, m);
      if (pw == 0) continue;
      for (int i = 0; i <= n; ++i) {
        const BigInt r = rho(c, i, v);
        if (r == 0) continue;
        BigInt term = pw * elem_sym_range(n - 1 - m, -i + 1, n - 1 - i) * r;
        if (i % 2) s -= term; else s += term;
      }
    }
    coeffs[m] = s;
  }
  return UniPoly(std::move(coeffs)) * make_rational(1, factorial(n - 1));
}

EhrhartResult ehrhart_rkc_closed(int k, const IntTuple& c) {
  if (c.empty() || k < 1 || k >= c.sum()) {
    throw std::invalid_argument("ehrhart_rkc_closed: need 1 <= k < sum(c)");
  }
  UniPoly binom_form = rkc_binomial_form(k, c);
  UniPoly power_form = rkc_power_form(k, c);
  if (binom_form != power_form) {
    throw std::logic_error("R_{k,c} closed forms disagree: " + binom_form.to_string() +
                           " vs " + power_form.to_string());
  }
  return {std::move(binom_form), EhrhartMethod::closed_rkc};
}

UniPoly Pan5Terms::total() const {
  return main + shift_t_first + shift_const_first + shift_t_second + shift_const_second;
}

Pan5Terms pan5term_parts(int k, const IntTuple& c) {
  if (c.empty() || k < 1) {
    throw std::invalid_argument("pan5term: need k >= 1 and nonempty c");
  }
  const int n = static_cast<int>(c.size()) + 1;
  const int last = c[c.size() - 1];
  const IntTuple c_prime(std::vector<int>(c.begin(), c.end() - 1));
  const int max_i = n - 2;

  // sum_i (-1)^i sum_{v=0}^{v_max} base(v)^m P^{deg}_{lo(i),hi(i)} rho(v),
  // where base(v) = k - v - offset.
  auto inner = [&](int m, int deg, int offset, int lo_shift, int hi_shift) {
    BigInt s = 0;
    const int v_max = k - offset - 1;
    for (int i = 0; i <= max_i; ++i) {
      for (int v = 0; v <= v_max; ++v) {
        const BigInt r = rho(c_prime, i, v);
        if (r == 0) continue;
        BigInt term = power(k - v - offset, m) *
                      elem_sym_range(deg, -i + lo_shift, n - 1 - i + hi_shift) * r;
        if (i % 2) s -= term; else s += term;
      }
    }
    return s;
  };

  Pan5Terms parts;
  for (int m = 0; m <= n - 1; ++m) {
    const int deg = n - 1 - m;
    parts.main += monomial(Rational(inner(m, deg, 0, 1, 0)), m);
    const BigInt mid = inner(m, deg, last, 0, -1);
    parts.shift_t_first += monomial(Rational(-last * mid), m + 1);
    parts.shift_const_first += monomial(Rational(-2 * mid), m);
    const BigInt low = inner(m, deg, last, -1, -2);
    parts.shift_t_second += monomial(Rational(last * low), m + 1);
    parts.shift_const_second += monomial(Rational(low), m);
  }
  return parts;
}

EhrhartResult ehrhart_pan5term_closed(int k, const IntTuple& c) {
  const int n = static_cast<int>(c.size()) + 1;
  UniPoly total = pan5term_parts(k, c).total() * make_rational(1, factorial(n - 1));
  return {std::move(total), EhrhartMethod::closed_pan5term};
}

std::vector<BigInt> scaled_integer_coeffs(const UniPoly& p, int n) {
  const Rational scale(factorial(n - 1));
  std::vector<BigInt> out;
  for (const auto& c : p.coeffs()) {
    Rational s = c * scale;
    if (s.get_den() != 1) {
      throw std::logic_error("scaled_integer_coeffs: non-integer coefficient " +
                             s.get_str());
    }
    out.push_back(s.get_num());
  }
  return out;
}

}  // namespace wmh
