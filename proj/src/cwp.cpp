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

#include "wmh/cwp.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wmh {

namespace {

Cycle rotate_min_first(Cycle c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

void check_partition(int n, const std::vector<Cycle>& cycles) {
  if (n < 1) throw std::invalid_argument("Cwp: n must be >= 1");
  std::vector<bool> seen(n, false);
  int total = 0;
  for (const auto& c : cycles) {
    if (c.empty()) throw std::invalid_argument("Cwp: empty cycle");
    for (int e : c) {
      if (e < 1 || e > n || seen[e - 1]) {
        throw std::invalid_argument("Cwp: cycles do not partition [n]");
      }
      seen[e - 1] = true;
      ++total;
    }
  }
  if (total != n) throw std::invalid_argument("Cwp: cycles do not cover [n]");
}

void check_weights(std::size_t cycles, const std::vector<long>& weights) {
  if (weights.size() != cycles) {
    throw std::invalid_argument("Cwp: need exactly one weight per cycle");
  }
  for (long w : weights) {
    if (w < 0) throw std::invalid_argument("Cwp: weights must be nonnegative");
  }
}

}  // namespace

void Cwp::rebuild_index() {
  cycle_of_.assign(n_, -1);
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    for (int e : cycles_[i]) cycle_of_[e - 1] = static_cast<int>(i);
  }
}

Cwp Cwp::from_ordered(int n, const OrderedCycles& ordered) {
  check_partition(n, ordered.cycles);
  check_weights(ordered.cycles.size(), ordered.weights);
  const std::size_t m = ordered.cycles.size();
  if (std::find(ordered.cycles.back().begin(), ordered.cycles.back().end(), 1) ==
      ordered.cycles.back().end()) {
    throw std::invalid_argument("Cwp: the cycle holding 1 must come last");
  }

  std::vector<std::size_t> by_min(m);
  std::iota(by_min.begin(), by_min.end(), 0);
  std::vector<int> minima(m);
  for (std::size_t j = 0; j < m; ++j) {
    minima[j] = *std::min_element(ordered.cycles[j].begin(), ordered.cycles[j].end());
  }
  std::sort(by_min.begin(), by_min.end(),
            [&](std::size_t a, std::size_t b) { return minima[a] < minima[b]; });

  Cwp x;
  x.n_ = n;
  x.order_.assign(m, 0);
  for (std::size_t rank = 0; rank < m; ++rank) {
    const std::size_t j = by_min[rank];
    x.cycles_.push_back(rotate_min_first(ordered.cycles[j]));
    x.weights_.push_back(ordered.weights[j]);
    x.order_[j] = static_cast<int>(rank) + 1;
  }
  x.rebuild_index();
  return x;
}

Cwp Cwp::make(int n, std::vector<Cycle> cycles, std::vector<int> order,
              std::vector<long> weights) {
  check_partition(n, cycles);
  check_weights(cycles.size(), weights);
  const std::size_t m = cycles.size();
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(m);
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) throw std::invalid_argument("Cwp: p must be a permutation of [m]");
  if (order.back() != 1) throw std::invalid_argument("Cwp: p(m) must equal 1");

  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  auto min_of = [&](std::size_t i) { return *std::min_element(cycles[i].begin(), cycles[i].end()); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return min_of(a) < min_of(b); });

  Cwp x;
  x.n_ = n;
  for (std::size_t i : idx) {
    x.cycles_.push_back(rotate_min_first(cycles[i]));
    x.weights_.push_back(weights[i]);
  }
  x.order_ = std::move(order);
  x.rebuild_index();
  return x;
}

long Cwp::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0L);
}

int descent_count(const std::vector<int>& one_line) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < one_line.size(); ++i) {
    if (one_line[i] > one_line[i + 1]) ++d;
  }
  return d;
}

int Cwp::descents() const { return descent_count(order_); }

CwpType Cwp::type() const { return {n_, num_cycles(), total_weight() + descents()}; }

std::vector<int> Cwp::ordered_indices() const {
  std::vector<int> out;
  out.reserve(order_.size());
  for (int rank : order_) out.push_back(rank - 1);
  return out;
}

OrderedCycles Cwp::ordered() const {
  OrderedCycles out;
  for (int i : ordered_indices()) {
    out.cycles.push_back(cycles_[i]);
    out.weights.push_back(weights_[i]);
  }
  return out;
}

std::string Cwp::notation() const {
  std::ostringstream os;
  const auto idx = ordered_indices();
  for (int i : idx) {
    os << "(";
    for (std::size_t j = 0; j < cycles_[i].size(); ++j) {
      if (j) os << " ";
      os << cycles_[i][j];
    }
    os << ")";
  }
  os << " w=(";
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j) os << ",";
    os << weights_[idx[j]];
  }
  os << ")";
  return os.str();
}

std::strong_ordering operator<=>(const Cwp& a, const Cwp& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.cycles_ <=> b.cycles_; c != 0) return c;
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return a.weights_ <=> b.weights_;
}

std::vector<Cycle> ordered_cycles(const Cwp& x) { return x.ordered().cycles; }

CwpType cwp_type(const Cwp& x) { return x.type(); }

long cycle_csum(const Cycle& cycle, const IntTuple& c) {
  long s = 0;
  for (int e : cycle) s += c[e - 1];
  return s;
}

bool is_c_compatible(const Cwp& x, const IntTuple& c) {
  if (c.size() != static_cast<std::size_t>(x.n())) {
    throw std::invalid_argument("is_c_compatible: |c| must equal n");
  }
  for (int i = 0; i < x.num_cycles(); ++i) {
    if (x.weights()[i] >= cycle_csum(x.cycles()[i], c)) return false;
  }
  return true;
}

bool is_properly_weighted(int cycle_index, const Cwp& x, const IntTuple& c_prime) {
  const int n = x.n();
  if (c_prime.size() + 2 != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("is_properly_weighted: |c'| must equal n - 2");
  }
  const Cycle& cyc = x.cycles()[cycle_index];
  long low_sum = 0;
  bool touches_tail = false;
  for (int e : cyc) {
    if (e >= n - 1) touches_tail = true;
    else low_sum += c_prime[e - 1];
  }
  const long bound = touches_tail ? 1 + low_sum : low_sum;
  return x.weights()[cycle_index] < bound;
}

bool is_ac_compatible(const Cwp& x, const IntTuple& c_prime) {
  for (int i = 0; i < x.num_cycles(); ++i) {
    if (!is_properly_weighted(i, x, c_prime)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

const std::vector<std::vector<Cycle>>& permutations_with_cycles(int n, int m) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<std::vector<Cycle>>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::vector<std::vector<Cycle>>> buckets(n + 1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<bool> seen(n);
    do {
      std::fill(seen.begin(), seen.end(), false);
      std::vector<Cycle> cycles;
      for (int start = 1; start <= n; ++start) {
        if (seen[start - 1]) continue;
        Cycle c;
        for (int e = start; !seen[e - 1]; e = perm[e - 1]) {
          seen[e - 1] = true;
          c.push_back(e);
        }
        cycles.push_back(std::move(c));
      }
      buckets[cycles.size()].push_back(std::move(cycles));
    } while (std::next_permutation(perm.begin(), perm.end()));
    it = cache.emplace(n, std::move(buckets)).first;
  }
  static const std::vector<std::vector<Cycle>> none;
  if (m < 0 || m > n) return none;
  return it->second[m];
}

namespace {

struct Ordering {
  std::vector<int> p;
  int des;
};

// All p of [m] with p(m) = 1, lexicographic.
const std::vector<Ordering>& orderings(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<Ordering>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Ordering> out;
  std::vector<int> head(m - 1);
  std::iota(head.begin(), head.end(), 2);
  do {
    std::vector<int> p = head;
    p.push_back(1);
    const int d = descent_count(p);
    out.push_back({std::move(p), d});
  } while (std::next_permutation(head.begin(), head.end()));
  return cache.emplace(m, std::move(out)).first->second;
}

}  // namespace

class CwpEnumerator {
 public:
  static BigInt run(int n, int m, long k, const CwpPredicate& predicate, const CycleCap& cap,
                    const CwpSink& sink, const EnumerationOptions& opts) {
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_cwp: need n >= 1 and m >= 1");
    if (n > opts.cap) {
      throw ResourceError("enumerate_cwp: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(opts.cap));
    }
    if (m > n || k < 0) return 0;
    const auto& sigmas = permutations_with_cycles(n, m);
    const auto& ps = orderings(m);

    unsigned workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (sink || sigmas.size() < 64) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(sigmas.size()));

    auto chunk = [&](std::size_t lo, std::size_t hi) {
      std::uint64_t count = 0;
      Cwp x;
      x.n_ = n;
      x.weights_.assign(m, 0);
      Walk walk{x, predicate, sink, std::vector<long>(m, k), std::vector<long>(m + 1, 0)};
      for (std::size_t s = lo; s < hi; ++s) {
        x.cycles_ = sigmas[s];
        x.rebuild_index();
        if (cap) {
          for (int i = 0; i < m; ++i) walk.caps[i] = std::min(k, cap(x.cycles_[i]));
        }
        // room[i] = most weight cycles 0..i-1 can absorb
        for (int i = 0; i < m; ++i) walk.room[i + 1] = walk.room[i] + std::max(0L, walk.caps[i]);
        if (std::any_of(walk.caps.begin(), walk.caps.end(), [](long c) { return c < 0; })) continue;
        for (const auto& ord : ps) {
          const long budget = k - ord.des;
          if (budget < 0) continue;
          x.order_ = ord.p;
          count += walk.compositions(m - 1, budget);
        }
      }
      return count;
    };

    if (workers == 1) return BigInt(static_cast<unsigned long>(chunk(0, sigmas.size())));
    std::vector<std::future<std::uint64_t>> parts;
    const std::size_t step = (sigmas.size() + workers - 1) / workers;
    for (std::size_t lo = 0; lo < sigmas.size(); lo += step) {
      parts.push_back(std::async(std::launch::async, chunk, lo,
                                 std::min(sigmas.size(), lo + step)));
    }
    std::uint64_t total = 0;
    for (auto& f : parts) total += f.get();
    return BigInt(static_cast<unsigned long>(total));
  }

 private:
  struct Walk {
    Cwp& x;
    const CwpPredicate& predicate;
    const CwpSink& sink;
    std::vector<long> caps;
    std::vector<long> room;

    // Fills weights[idx], weights[idx-1], ..., weights[0] with a composition
    // of `remaining`; the highest index varies slowest (colex order).
    std::uint64_t compositions(int idx, long remaining) {
      if (idx == 0) {
        if (remaining > caps[0]) return 0;
        x.weights_[0] = remaining;
        if (predicate && !predicate(x)) return 0;
        if (sink) sink(x);
        return 1;
      }
      std::uint64_t count = 0;
      const long lo = std::max(0L, remaining - room[idx]);
      const long hi = std::min(remaining, caps[idx]);
      for (long w = lo; w <= hi; ++w) {
        x.weights_[idx] = w;
        count += compositions(idx - 1, remaining - w);
      }
      return count;
    }
  };
};

BigInt enumerate_cwp(int n, int m, long k, const CwpPredicate& predicate,
                     const CwpSink& sink, const EnumerationOptions& opts) {
  return CwpEnumerator::run(n, m, k, predicate, nullptr, sink, opts);
}

BigInt enumerate_cwp_capped(int n, int m, long k, const CwpPredicate& predicate,
                            const CycleCap& cap, const CwpSink& sink,
                            const EnumerationOptions& opts) {
  return CwpEnumerator::run(n, m, k, predicate, cap, sink, opts);
}

std::vector<BigInt> last_one_descent_distribution(int m) {
  std::vector<BigInt> dist(std::max(m, 1));
  for (const auto& ord : orderings(m)) dist[ord.des] += 1;
  return dist;
}

BigInt cwp_count_formula(int n, int m, long k) {
  if (m < 1 || m > n || k < 0) return 0;
  const auto dist = last_one_descent_distribution(m);
  BigInt pairs = 0;
  for (std::size_t d = 0; d < dist.size(); ++d) {
    const long budget = k - static_cast<long>(d);
    if (budget < 0) continue;
    pairs += dist[d] * binomial(budget + m - 1, m - 1);
  }
  return stirling_first(n, m) * pairs;
}

BigInt coeff_hypersimplex_comb(int n, int m, int k, const EnumerationOptions& opts) {
  return coeff_rkc_comb(IntTuple::repeat(n, 1), m, k, opts);
}

BigInt coeff_rkc_comb(const IntTuple& c, int m, int k, const EnumerationOptions& opts) {
  const int n = static_cast<int>(c.size());
  return enumerate_cwp_capped(
      n, m + 1, k, [&c](const Cwp& x) { return is_c_compatible(x, c); },
      [&c](const Cycle& cyc) { return cycle_csum(cyc, c) - 1; }, nullptr, opts);
}

BigInt weighted_lah_enumerated(int n, int m, int l, const EnumerationOptions& opts) {
  if (n > opts.cap) {
    throw ResourceError("weighted_lah_enumerated: n=" + std::to_string(n) + " exceeds cap");
  }
  if (m < 1 || m > n || l < 0) return n == 0 && m == 0 && l == 0 ? 1 : 0;
  std::uint64_t count = 0;
  for (const auto& sigma : permutations_with_cycles(n, m)) {
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
      if (i == sigma.size()) {
        if (remaining == 0) ++count;
        return;
      }
      const int len = static_cast<int>(sigma[i].size());
      for (int w = 0; w < len && w <= remaining; ++w) self(self, i + 1, remaining - w);
    };
    rec(rec, 0, l);
  }
  return BigInt(static_cast<unsigned long>(count));
}

}  // namespace wmh
