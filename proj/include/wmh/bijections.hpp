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

// The injections f1: S3 -> S1 u S2 and f2: S4 -> S1 u S2 for c' = 1, their
// inverses on their images, the witness map from compatible objects over
// [n-1], and an exhaustive verifier tying them to positivity of the
// Ehrhart coefficients of Pan_{k,n-2,n}.

#include <optional>
#include <string>
#include <vector>

#include "wmh/pan_sets.hpp"

namespace wmh {

/// Splits the cycle at position `index` (in cycle order) into its first
/// `head_len` elements and the rest. Both halves replace the original in
/// place, except that the tail half moves to the front when the head half
/// holds 1. New cycles get weight 0; other weights are carried over.
OrderedCycles split_cycle_in_order(const OrderedCycles& ordered, std::size_t index,
                                   std::size_t head_len);

/// Throws std::invalid_argument if x is not in S3 of its own type, and
/// UnsupportedError unless c' = 1.
Cwp f1(const Cwp& x, const IntTuple& c_prime);
/// Merges the n-cycle with the cycle before it (cyclically). nullopt when
/// y cannot be an image of f1.
std::optional<Cwp> f1_inverse(const Cwp& y, const IntTuple& c_prime);

/// Throws std::invalid_argument if x is not in S4 of its own type, and
/// UnsupportedError unless c' = 1.
Cwp f2(const Cwp& x, const IntTuple& c_prime);
std::optional<Cwp> f2_inverse(const Cwp& y, const IntTuple& c_prime);

/// Inserts n right after n-1 in the cycle decomposition of y (over [n-1]).
/// Throws std::invalid_argument unless y is (1,...,1)-compatible.
Cwp positivity_witness(const Cwp& y);

struct PositivityLevel {
  int m = 0;
  BigInt s1, s2, s3, s4;
  BigInt closed_coefficient;  // [t^m] (n-1)! ehr from the closed form
  bool f1_into_target = true;
  bool f1_injective = true;
  bool f1_roundtrip = true;
  bool f2_into_target = true;
  bool f2_injective = true;
  bool f2_roundtrip = true;
  bool images_disjoint = true;
  bool f2_marker = true;  // cycle before the n-cycle holds n-1 exactly on Im(f2)
  bool witness_required = false;
  BigInt witnesses;  // images of the witness map
  bool witnesses_valid = true;
  std::optional<std::string> counterexample;

  BigInt coefficient() const { return s1 + s2 - s3 - s4; }
  bool maps_ok() const;
  bool pass() const;
};

struct PositivityReport {
  int n = 0;
  int k = 0;
  std::vector<PositivityLevel> levels;  // m = 0..n-1
  UniPoly ehrhart;                      // closed form, unscaled
  long degree = 0;
  /// Every coefficient t^0..t^degree of the polynomial is positive.
  bool ehrhart_positive = false;
  /// Positive for every 0 <= m <= n-1.
  bool reading_all_m = false;
  /// k <= n-2: every m <= n-1; k = n-1: m <= 2.
  bool reading_split = false;

  bool pass() const;
};

/// Exhaustive check for c' = 1. Requires 3 <= n <= cap and 1 <= k <= n-1.
PositivityReport verify_positivity(int n, int k, const EnumerationOptions& opts = {});

}  // namespace wmh
