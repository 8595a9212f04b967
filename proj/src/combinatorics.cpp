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

#include "wmh/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace wmh {

IntTuple::IntTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) {
      throw std::invalid_argument("IntTuple entries must be >= 1, got " +
                                  std::to_string(e));
    }
  }
}

IntTuple::IntTuple(std::initializer_list<int> entries)
    : IntTuple(std::vector<int>(entries)) {}

IntTuple IntTuple::repeat(std::size_t count, int value) {
  return IntTuple(std::vector<int>(count, value));
}

long IntTuple::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

bool IntTuple::all_ones() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 1; });
}

IntTuple IntTuple::concat(const IntTuple& tail) const {
  std::vector<int> out = entries_;
  out.insert(out.end(), tail.entries_.begin(), tail.entries_.end());
  return IntTuple(std::move(out));
}

std::string IntTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

namespace {

// Triangular table grown on demand; row n has entries 0..n.
class TriangleMemo {
 public:
  template <class Recurrence>
  BigInt get(unsigned n, unsigned m, Recurrence rec) {
    if (m > n) return 0;
    std::lock_guard lock(mu_);
    while (rows_.size() <= n) {
      const unsigned r = static_cast<unsigned>(rows_.size());
      std::vector<BigInt> row(r + 1);
      for (unsigned j = 0; j <= r; ++j) row[j] = rec(rows_, r, j);
      rows_.push_back(std::move(row));
    }
    return rows_[n][m];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
};

BigInt at(const std::vector<std::vector<BigInt>>& rows, long n, long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  return rows[n][m];
}

}  // namespace

BigInt stirling_first(unsigned n, unsigned m) {
  static TriangleMemo memo;
  return memo.get(n, m, [](const auto& rows, unsigned r, unsigned j) -> BigInt {
    if (r == 0) return j == 0 ? 1 : 0;
    return at(rows, r - 1, static_cast<long>(j) - 1) + BigInt(r - 1) * at(rows, r - 1, j);
  });
}

BigInt eulerian(unsigned n, unsigned d) {
  static TriangleMemo memo;
  // A(n, n) = 0 for n >= 1, which the recurrence produces on its own.
  return memo.get(n, d, [](const auto& rows, unsigned r, unsigned j) -> BigInt {
    if (r == 0) return j == 0 ? 1 : 0;
    return BigInt(j + 1) * at(rows, r - 1, j) +
           BigInt(r - j) * at(rows, r - 1, static_cast<long>(j) - 1);
  });
}

BigInt elem_sym_range(unsigned n, long a, long b) {
  if (n == 0) return 1;
  const long len = std::max(0L, b - a + 1);
  if (static_cast<long>(n) > len) return 0;

  static std::mutex mu;
  static std::map<std::tuple<unsigned, long, long>, BigInt> memo;
  const auto key = std::make_tuple(n, a, b);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // P^j_{a,e} = P^j_{a,e-1} + e * P^{j-1}_{a,e-1}, swept over e = a..b.
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (long e = a; e <= b; ++e) {
    for (unsigned j = n; j >= 1; --j) row[j] += BigInt(e) * row[j - 1];
  }
  std::lock_guard lock(mu);
  memo.emplace(key, row[n]);
  return row[n];
}

BigInt rho(const IntTuple& c, unsigned i, long v) {
  if (i > c.size() || v < 0) return 0;
  static std::mutex mu;
  // table[i][v] for one c
  static std::map<std::vector<int>, std::vector<std::vector<BigInt>>> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(c.values());
  if (it == memo.end()) {
    const long total = c.sum();
    std::vector<std::vector<BigInt>> table(c.size() + 1,
                                           std::vector<BigInt>(total + 1));
    table[0][0] = 1;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const int cj = c[idx];
      for (std::size_t size = idx + 1; size >= 1; --size) {
        for (long s = total; s >= cj; --s) table[size][s] += table[size - 1][s - cj];
      }
    }
    it = memo.emplace(c.values(), std::move(table)).first;
  }
  const auto& row = it->second[i];
  return v < static_cast<long>(row.size()) ? row[v] : BigInt(0);
}

BigInt weighted_lah(unsigned n, unsigned m, unsigned l) {
  // poly[n][m] is the weight generating polynomial sum_l W(n, m, l) y^l.
  static std::mutex mu;
  static std::vector<std::vector<std::vector<BigInt>>> poly;
  std::lock_guard lock(mu);
  while (poly.size() <= n) {
    const unsigned r = static_cast<unsigned>(poly.size());
    std::vector<std::vector<BigInt>> row(r + 1);
    if (r == 0) {
      row[0] = {BigInt(1)};
    } else {
      for (unsigned cyc = 1; cyc <= r; ++cyc) {
        std::vector<BigInt> acc;
        // The cycle through r has length len; its weight ranges over 0..len-1.
        for (unsigned len = 1; len <= r - cyc + 1; ++len) {
          const auto& rest = poly[r - len][cyc - 1];
          if (rest.empty()) continue;
          const BigInt ways = binomial(r - 1, len - 1) * factorial(len - 1);
          if (acc.size() < rest.size() + len - 1) acc.resize(rest.size() + len - 1);
          for (std::size_t e = 0; e < rest.size(); ++e) {
            if (rest[e] == 0) continue;
            for (unsigned w = 0; w < len; ++w) acc[e + w] += ways * rest[e];
          }
        }
        row[cyc] = std::move(acc);
      }
    }
    poly.push_back(std::move(row));
  }
  if (m > n) return 0;
  const auto& p = poly[n][m];
  return l < p.size() ? p[l] : BigInt(0);
}

}  // namespace wmh
