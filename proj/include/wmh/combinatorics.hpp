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

// Integer combinatorial kernels. Every function is thread-safe; results are
// memoized in process-wide tables guarded by a mutex.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wmh/exactmath.hpp"

namespace wmh {

/// Tuple of positive integers (block sizes a, block capacities c).
class IntTuple {
 public:
  IntTuple() = default;
  /// Throws std::invalid_argument if any entry is < 1.
  explicit IntTuple(std::vector<int> entries);
  IntTuple(std::initializer_list<int> entries);

  /// `count` copies of `value`.
  static IntTuple repeat(std::size_t count, int value);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<int>& values() const { return entries_; }
  long sum() const;
  bool all_ones() const;

  IntTuple concat(const IntTuple& tail) const;
  std::string to_string() const;  // "1,2,2"

  friend auto operator<=>(const IntTuple&, const IntTuple&) = default;

 private:
  std::vector<int> entries_;
};

/// Unsigned Stirling number of the first kind: permutations of [n] with m cycles.
BigInt stirling_first(unsigned n, unsigned m);

/// Eulerian number: permutations of [n] with exactly d descents. A(0,0) = 1.
BigInt eulerian(unsigned n, unsigned d);

/// Elementary symmetric polynomial of degree n over the integers a..b.
/// P^0 = 1; zero when n exceeds the range length.
BigInt elem_sym_range(unsigned n, long a, long b);

/// Number of i-element index subsets of c whose entries sum to v.
BigInt rho(const IntTuple& c, unsigned i, long v);

/// Weighted Lah number: pairs (sigma, w) with sigma in S_n having m cycles,
/// each cycle weighted strictly below its length, total weight l.
/// Computed by recursion on the cycle containing n.
BigInt weighted_lah(unsigned n, unsigned m, unsigned l);

}  // namespace wmh
