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

#pragma once

// Weighted multi-hypersimplices and the routes to their Ehrhart polynomials:
// lattice counting (block enumeration and raw vectors), generating-function
// extraction, interpolation, and the closed summation formulas.

#include <optional>
#include <string>
#include <string_view>

#include "wmh/combinatorics.hpp"
#include "wmh/exactmath.hpp"

namespace wmh {

/// Nonnegative x in R^n with sum k and the i-th block of a_i coordinates
/// summing to at most c_i. n is the sum of a.
class PolytopeSpec {
 public:
  /// Throws std::invalid_argument when k < 1, a is empty, or |a| != |c|.
  PolytopeSpec(int k, IntTuple a, IntTuple c);

  static PolytopeSpec hypersimplex(int k, int n);
  static PolytopeSpec r_kc(int k, IntTuple c);
  /// Pan_{k,r,n}: the last n - r coordinates form a single block of capacity 1.
  static PolytopeSpec panhandle(int k, int r, int n);
  /// (k, (1^(n-2), 2), (c', 1)).
  static PolytopeSpec pan_target(int k, int n, const IntTuple& c_prime);

  int k() const { return k_; }
  const IntTuple& a() const { return a_; }
  const IntTuple& c() const { return c_; }
  int n() const { return n_; }
  std::size_t blocks() const { return a_.size(); }

  bool is_hypersimplex() const { return a_.all_ones() && c_.all_ones(); }
  bool is_rkc() const { return a_.all_ones(); }
  /// a = (1^(n-2), 2) with n >= 2.
  bool is_pan_shape() const;

  std::string to_string() const;
  friend auto operator<=>(const PolytopeSpec&, const PolytopeSpec&) = default;

 private:
  int k_;
  IntTuple a_;
  IntTuple c_;
  int n_;
};

enum class EhrhartMethod {
  brute_interp,
  genfun_interp,
  closed_hypersimplex,
  closed_rkc,
  closed_pan5term,
};

std::string_view to_string(EhrhartMethod m);

struct EhrhartResult {
  UniPoly poly;
  EhrhartMethod method;
};

enum class Counter { brute, genfun };

/// Lattice points of t * P, by enumerating block totals with capacity pruning
/// and weighting each by stars-and-bars. Throws std::invalid_argument if t < 1.
BigInt lattice_count(const PolytopeSpec& spec, long t);

/// Slow oracle: enumerates the lattice vectors themselves.
/// Throws std::invalid_argument unless 1 <= t and n * t <= 24.
BigInt lattice_count_raw(const PolytopeSpec& spec, long t);

enum class FactorForm { binomial_series, derivative };

/// The factor sum_{j=0}^{c t} C(j + a - 1, a - 1) x^j, truncated at bound.
TruncSeries genfun_factor(int a, int c, long t, std::size_t bound);
/// The same factor built as D^(a-1)((1 - x^(c t + a)) / (1 - x)) / (a-1)!.
TruncSeries genfun_factor_derivative(int a, int c, long t, std::size_t bound);

/// [x^(kt)] of the product of the per-block factors.
BigInt ehrhart_genfun_count(const PolytopeSpec& spec, long t,
                            FactorForm form = FactorForm::binomial_series);

BigInt count_with(const PolytopeSpec& spec, long t, Counter counter);

/// Interpolates through t = 0 (value 1) and t = 1..n-1, then checks the
/// prediction at t = n against the counter. nullopt for an empty polytope.
/// Throws std::logic_error if the t = n check fails.
std::optional<EhrhartResult> ehrhart_interpolated(const PolytopeSpec& spec,
                                                  Counter counter = Counter::brute);

bool is_empty(const PolytopeSpec& spec);

/// sum_{i<k} (-1)^i C(n,i) C((k-i)t - i + n - 1, n - 1).
UniPoly hypersimplex_binomial_form(int k, int n);
/// (1/(n-1)!) sum_m t^m sum_{i<k} (-1)^i C(n,i) (k-i)^m P^{n-1-m}_{-i+1,n-1-i}.
UniPoly hypersimplex_power_form(int k, int n);
/// Both forms; throws std::invalid_argument unless 1 <= k <= n-1, and
/// std::logic_error if the forms disagree.
EhrhartResult ehrhart_hypersimplex_closed(int k, int n);

/// Inclusion-exclusion over capacity-violating index sets.
UniPoly rkc_binomial_form(int k, const IntTuple& c);
/// Per-coefficient form through P-sums and rho.
UniPoly rkc_power_form(int k, const IntTuple& c);
/// Throws std::invalid_argument unless 1 <= k < sum(c).
EhrhartResult ehrhart_rkc_closed(int k, const IntTuple& c);

/// The five t^m / t^(m+1) sums for (k, (1^(n-2), 2), c), c of length n-1.
/// Returned scaled by (n-1)!, i.e. an integer polynomial.
struct Pan5Terms {
  UniPoly main;           // t^m, (k-v)^m P_{-i+1,n-1-i}
  UniPoly shift_t_first;  // -c_{n-1} t^(m+1), P_{-i,n-2-i}
  UniPoly shift_const_first;   // -2 t^m, P_{-i,n-2-i}
  UniPoly shift_t_second;      // +c_{n-1} t^(m+1), P_{-i-1,n-3-i}
  UniPoly shift_const_second;  // +t^m, P_{-i-1,n-3-i}
  UniPoly total() const;
};
Pan5Terms pan5term_parts(int k, const IntTuple& c);
/// Throws std::invalid_argument when c is empty or k < 1.
EhrhartResult ehrhart_pan5term_closed(int k, const IntTuple& c);

/// (n-1)! * p, asserted to have integer coefficients.
std::vector<BigInt> scaled_integer_coeffs(const UniPoly& p, int n);

}  // namespace wmh
