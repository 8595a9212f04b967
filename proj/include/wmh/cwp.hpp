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

// Cycle-ordered weighted permutations (sigma, p, w).
//
// Storage is canonical: each cycle is rotated so its minimum comes first and
// cycles are listed by increasing minimum. The cycle ordering lives only in
// p (one-line notation over 1..m): the j-th cycle in order is the one whose
// minimum has rank p_j among the cycle minima. p_m = 1, so the cycle holding
// 1 always comes last. Weights are aligned with the canonical cycle list.

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wmh/combinatorics.hpp"
#include "wmh/errors.hpp"
#include "wmh/exactmath.hpp"

namespace wmh {

using Cycle = std::vector<int>;

struct CwpType {
  int n;
  int m;
  long k;
  friend bool operator==(const CwpType&, const CwpType&) = default;
};

/// Cycles and their weights listed in cycle order; each cycle in whatever
/// rotation the producer chose.
struct OrderedCycles {
  std::vector<Cycle> cycles;
  std::vector<long> weights;
};

class Cwp {
 public:
  /// Builds from cycles in cycle order (any rotations). Throws
  /// std::invalid_argument unless the cycles partition [n], the weights are
  /// nonnegative and one per cycle, and the cycle holding 1 is last.
  static Cwp from_ordered(int n, const OrderedCycles& ordered);
  /// Builds from cycles in any order and rotation, an explicit p, and
  /// weights aligned with `cycles` as given.
  static Cwp make(int n, std::vector<Cycle> cycles, std::vector<int> order,
                  std::vector<long> weights);

  int n() const { return n_; }
  int num_cycles() const { return static_cast<int>(cycles_.size()); }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const std::vector<int>& order() const { return order_; }
  const std::vector<long>& weights() const { return weights_; }

  long total_weight() const;
  int descents() const;
  CwpType type() const;
  /// Canonical index of the cycle holding `element` (1-based element).
  int cycle_of(int element) const { return cycle_of_[element - 1]; }
  /// Canonical cycle indices in cycle order.
  std::vector<int> ordered_indices() const;
  OrderedCycles ordered() const;

  /// "(4 5)(2 6)(1 3) w=(0,0,0)": cycles in order, min-first rotation.
  std::string notation() const;

  friend bool operator==(const Cwp& a, const Cwp& b) {
    return a.n_ == b.n_ && a.cycles_ == b.cycles_ && a.order_ == b.order_ &&
           a.weights_ == b.weights_;
  }
  friend std::strong_ordering operator<=>(const Cwp& a, const Cwp& b);

 private:
  friend class CwpEnumerator;
  Cwp() = default;
  void rebuild_index();

  int n_ = 0;
  std::vector<Cycle> cycles_;
  std::vector<int> order_;
  std::vector<long> weights_;
  std::vector<int> cycle_of_;
};

/// Number of descents of a one-line permutation.
int descent_count(const std::vector<int>& one_line);

/// Cycles in the order given by p.
std::vector<Cycle> ordered_cycles(const Cwp& x);
CwpType cwp_type(const Cwp& x);

/// Sum of c over the elements of a cycle (elements are 1-based indices into c).
long cycle_csum(const Cycle& cycle, const IntTuple& c);

/// w(cycle) < sum of c over the cycle, for every cycle. Throws
/// std::invalid_argument unless |c| = n.
bool is_c_compatible(const Cwp& x, const IntTuple& c);

/// Properness of one cycle for a = (1^(n-2), 2), c = (c', 1). A cycle holding
/// n-1 or n must weigh less than 1 + sum of c' over its elements <= n-2; any
/// other cycle less than the sum of c' over it. Throws std::invalid_argument
/// unless |c'| = n - 2.
bool is_properly_weighted(int cycle_index, const Cwp& x, const IntTuple& c_prime);
bool is_ac_compatible(const Cwp& x, const IntTuple& c_prime);

using CwpPredicate = std::function<bool(const Cwp&)>;
using CwpSink = std::function<void(const Cwp&)>;
/// Largest weight a cycle may carry; the enumerator skips heavier weightings
/// outright. Must be implied by the predicate it accompanies.
using CycleCap = std::function<long(const Cycle&)>;

constexpr int kDefaultEnumerationCap = 8;

struct EnumerationOptions {
  int cap = kDefaultEnumerationCap;
  /// Worker threads for counting; 0 picks hardware concurrency.
  unsigned workers = 0;
};

/// Counts all Cwp of type (n, m, k) satisfying `predicate` (null accepts
/// everything). When `sink` is given, matching objects are streamed to it
/// sequentially in the deterministic order: sigma in lexicographic one-line
/// order, p lexicographic, weight compositions colexicographic.
/// Throws ResourceError when n exceeds the cap, std::invalid_argument when
/// n < 1 or m < 1.
BigInt enumerate_cwp(int n, int m, long k, const CwpPredicate& predicate,
                     const CwpSink& sink = nullptr, const EnumerationOptions& opts = {});

/// As enumerate_cwp, pruning weightings that exceed `cap` on some cycle.
BigInt enumerate_cwp_capped(int n, int m, long k, const CwpPredicate& predicate,
                            const CycleCap& cap, const CwpSink& sink = nullptr,
                            const EnumerationOptions& opts = {});

/// Independent count of all type (n, m, k) objects: s(n, m) times the
/// number of (p, weak composition) pairs, via the descent distribution.
BigInt cwp_count_formula(int n, int m, long k);

/// Permutations of [m] with p(m) = 1, tallied by descent count.
std::vector<BigInt> last_one_descent_distribution(int m);

/// (1,...,1)-compatible Cwp of type (n, m+1, k), by exhaustive enumeration.
BigInt coeff_hypersimplex_comb(int n, int m, int k, const EnumerationOptions& opts = {});
/// c-compatible Cwp of type (n, m+1, k).
BigInt coeff_rkc_comb(const IntTuple& c, int m, int k, const EnumerationOptions& opts = {});

/// Weighted Lah numbers by brute force over permutations and weightings.
BigInt weighted_lah_enumerated(int n, int m, int l, const EnumerationOptions& opts = {});

/// Canonical cycle decompositions of all permutations of [n] with m cycles,
/// in lexicographic order of the one-line permutation.
const std::vector<std::vector<Cycle>>& permutations_with_cycles(int n, int m);

}  // namespace wmh
