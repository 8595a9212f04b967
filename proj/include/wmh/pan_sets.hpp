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

// Signed set counts for the coefficients of
// (n-1)! ehr(Delta_{k,(1^(n-2),2),(c',1)}, t).
//
// S1, S2 hold objects of type (n, m+1, k); S3, S4 of type (n, m, k). Their
// signed sum |S1| + |S2| - |S3| - |S4| is the coefficient of t^m. The A-sets
// refine the five summation terms a1..a5 of the closed form.

#include <array>
#include <string>

#include "wmh/cwp.hpp"

namespace wmh {

struct PanContext {
  int n;
  int m;  // coefficient index
  int k;
  IntTuple c_prime;  // length n - 2

  /// Throws std::invalid_argument unless n >= 3, |c'| = n - 2, k >= 1, m >= 0.
  void validate() const;
  /// True in the degenerate single-cycle case m = 0 with k = n - 1 or
  /// k = sum(c') + 1, where S1 and A1 are all objects of type (n, 1, k).
  bool exceptional() const;
};

/// Sum of c' over the elements of a cycle that are <= n - 2.
long low_csum(const Cycle& cycle, const IntTuple& c_prime, int n);

bool in_s1(const Cwp& x, const PanContext& ctx);
bool in_s2(const Cwp& x, const PanContext& ctx);
bool in_s3(const Cwp& x, const PanContext& ctx);
bool in_s4(const Cwp& x, const PanContext& ctx);

struct SCounts {
  BigInt s1, s2, s3, s4;
  int m = 0;
  int n = 0;
  int k = 0;
  IntTuple c_prime;
  BigInt signed_sum() const { return s1 + s2 - s3 - s4; }
};

/// Enumerates the four sets. Throws ResourceError above the cap.
SCounts count_s_sets(const PanContext& ctx, const EnumerationOptions& opts = {});

/// [t^m] (n-1)! ehr of the target polytope, from the five-term closed form.
BigInt pan_coefficient_closed(const PanContext& ctx);

bool in_a1(const Cwp& x, const PanContext& ctx);
bool in_a2(const Cwp& x, const PanContext& ctx);
bool in_a2_prime(const Cwp& x, const PanContext& ctx);
bool in_a3(const Cwp& x, const PanContext& ctx);
bool in_a3_prime(const Cwp& x, const PanContext& ctx);
bool in_a4(const Cwp& x, const PanContext& ctx);
bool in_a5(const Cwp& x, const PanContext& ctx);
bool in_a5_prime(const Cwp& x, const PanContext& ctx);

struct ACounts {
  /// a1..a5 from their summation formulas.
  std::array<BigInt, 5> formula;
  /// a1..a5 rebuilt from the set sizes below.
  std::array<BigInt, 5> from_sets;
  BigInt A1, A2, A2p, A3, A3p, A4, A5, A5p;

  bool terms_agree() const { return formula == from_sets; }
};

/// a_i by formula for c_{n-1} = 1 (a4 = a5 = 0 when m = 0).
std::array<BigInt, 5> a_terms_formula(const PanContext& ctx);
ACounts count_a_sets(const PanContext& ctx, const EnumerationOptions& opts = {});

}  // namespace wmh
