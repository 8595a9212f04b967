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

// Deliberately naive reference implementations for the tests. Nothing here
// shares code paths with the library beyond the Cwp value type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "wmh/cwp.hpp"
#include "wmh/polytopes.hpp"

namespace oracle {

inline std::vector<std::vector<int>> perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<int>> cycles_of(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int e = s; !seen[e]; e = one_line[e - 1]) {
      seen[e] = true;
      cyc.push_back(e);
    }
    out.push_back(cyc);
  }
  return out;
}

inline int descents(const std::vector<int>& p) {
  int d = 0;
  for (std::size_t i = 1; i < p.size(); ++i) d += p[i - 1] > p[i];
  return d;
}

inline long stirling(int n, int m) {
  long c = 0;
  for (const auto& p : perms(n)) c += static_cast<int>(cycles_of(p).size()) == m;
  return c;
}

inline long eulerian(int n, int d) {
  long c = 0;
  for (const auto& p : perms(n)) c += descents(p) == d;
  return c;
}

/// Product over all n-subsets of the integers a..b.
inline long elem_sym(int n, int a, int b) {
  std::vector<int> xs;
  for (int i = a; i <= b; ++i) xs.push_back(i);
  const int len = static_cast<int>(xs.size());
  if (n > len) return 0;
  long total = 0;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (std::popcount(mask) != n) continue;
    long prod = 1;
    for (int i = 0; i < len; ++i) {
      if (mask >> i & 1u) prod *= xs[i];
    }
    total += prod;
  }
  return total;
}

/// Lattice points of the dilate by every vector in a box.
inline long lattice_points(const wmh::PolytopeSpec& spec, long t) {
  const int n = spec.n();
  std::vector<int> block;
  for (std::size_t b = 0; b < spec.blocks(); ++b) {
    for (int j = 0; j < spec.a()[b]; ++j) block.push_back(static_cast<int>(b));
  }
  const long total = spec.k() * t;
  std::vector<long> x(n, 0);
  long count = 0;
  while (true) {
    long sum = 0;
    std::vector<long> bs(spec.blocks(), 0);
    for (int i = 0; i < n; ++i) {
      sum += x[i];
      bs[block[i]] += x[i];
    }
    bool ok = sum == total;
    for (std::size_t b = 0; ok && b < bs.size(); ++b) ok = bs[b] <= spec.c()[b] * t;
    count += ok;
    int i = 0;
    while (i < n && x[i] == total) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

/// Every Cwp of type (n, m, k), built from one-line permutations, orders and
/// weight vectors without any pruning.
inline std::set<wmh::Cwp> all_cwp(int n, int m, long k) {
  std::set<wmh::Cwp> out;
  for (const auto& sigma : perms(n)) {
    const auto cyc = cycles_of(sigma);
    if (static_cast<int>(cyc.size()) != m) continue;
    for (const auto& p : perms(m)) {
      if (p.back() != 1) continue;
      const long budget = k - descents(p);
      if (budget < 0) continue;
      std::vector<long> w(m, 0);
      while (true) {
        if (std::accumulate(w.begin(), w.end(), 0L) == budget) {
          out.insert(wmh::Cwp::make(n, cyc, p, w));
        }
        int i = 0;
        while (i < m && w[i] == budget) w[i++] = 0;
        if (i == m) break;
        ++w[i];
      }
    }
  }
  return out;
}

}  // namespace oracle
