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

#include "wmh/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wmh/polytopes.hpp"

namespace wmh {

namespace {

void require_unit(const IntTuple& c_prime) {
  if (!c_prime.all_ones()) {
    throw UnsupportedError("f1/f2 are only defined for c' = (1,...,1)");
  }
}

bool contains(const Cycle& c, int e) { return std::find(c.begin(), c.end(), e) != c.end(); }

std::size_t position_of(const OrderedCycles& ord, int e) {
  for (std::size_t j = 0; j < ord.cycles.size(); ++j) {
    if (contains(ord.cycles[j], e)) return j;
  }
  throw std::logic_error("element missing from cycle decomposition");
}

// Rotates so that `e` is the last element.
Cycle ending_with(Cycle c, int e) {
  auto it = std::find(c.begin(), c.end(), e);
  std::rotate(c.begin(), it + 1, c.end());
  return c;
}

PanContext context_of(const Cwp& x, const IntTuple& c_prime) {
  return {x.n(), x.num_cycles(), static_cast<int>(x.type().k), c_prime};
}

// Descent count of the ordering induced by `ord` (weights are irrelevant).
int descents_of(int n, OrderedCycles ord) {
  std::fill(ord.weights.begin(), ord.weights.end(), 0);
  return Cwp::from_ordered(n, ord).descents();
}

}  // namespace

OrderedCycles split_cycle_in_order(const OrderedCycles& ordered, std::size_t index,
                                   std::size_t head_len) {
  const Cycle& cyc = ordered.cycles.at(index);
  if (head_len == 0 || head_len >= cyc.size()) {
    throw std::invalid_argument("split_cycle_in_order: both halves must be nonempty");
  }
  Cycle head(cyc.begin(), cyc.begin() + static_cast<long>(head_len));
  Cycle tail(cyc.begin() + static_cast<long>(head_len), cyc.end());
  const bool head_has_one = contains(head, 1);

  OrderedCycles out;
  if (head_has_one) {
    out.cycles.push_back(tail);
    out.weights.push_back(0);
  }
  for (std::size_t j = 0; j < ordered.cycles.size(); ++j) {
    if (j != index) {
      out.cycles.push_back(ordered.cycles[j]);
      out.weights.push_back(ordered.weights[j]);
      continue;
    }
    out.cycles.push_back(head);
    out.weights.push_back(0);
    if (!head_has_one) {
      out.cycles.push_back(tail);
      out.weights.push_back(0);
    }
  }
  return out;
}

Cwp f1(const Cwp& x, const IntTuple& c_prime) {
  require_unit(c_prime);
  const PanContext ctx = context_of(x, c_prime);
  if (!in_s3(x, ctx)) throw std::invalid_argument("f1: input is not in S3: " + x.notation());
  const int n = x.n();

  OrderedCycles ord = x.ordered();
  const std::size_t jn = position_of(ord, n);
  ord.cycles[jn] = ending_with(ord.cycles[jn], n);
  const Cycle cyc = ord.cycles[jn];
  const long w = ord.weights[jn];
  const std::size_t head_len = static_cast<std::size_t>(w) + 1;

  // d is the rank (from 0) of the last head element among the head.
  const int last = cyc[head_len - 1];
  const long d = std::count_if(cyc.begin(), cyc.begin() + static_cast<long>(head_len),
                               [last](int e) { return e < last; });

  OrderedCycles out = split_cycle_in_order(ord, jn, head_len);
  const int gain = descents_of(n, out) - x.descents();
  if (gain != 0 && gain != 1) throw std::logic_error("f1: descent change out of range");

  const std::size_t pos_head = position_of(out, cyc.front());
  const std::size_t pos_tail = position_of(out, n);
  const std::size_t pos_low = position_of(out, n - 1);
  const Cycle& tail = out.cycles[pos_tail];

  const long w_star = out.weights[pos_low] - gain;
  const long tail_cap = low_csum(tail, c_prime, n);
  const long w_tail = std::min(tail_cap, w - d + w_star);
  out.weights[pos_head] = d;
  out.weights[pos_tail] = w_tail;
  out.weights[pos_low] = w_star - (w_tail - (w - d));
  return Cwp::from_ordered(n, out);
}

std::optional<Cwp> f1_inverse(const Cwp& y, const IntTuple& c_prime) {
  require_unit(c_prime);
  const int n = y.n();
  OrderedCycles ord = y.ordered();
  const std::size_t count = ord.cycles.size();
  if (count < 3) return std::nullopt;  // needs head, tail and the n-1 cycle
  const std::size_t jn = position_of(ord, n);
  const std::size_t ja = (jn + count - 1) % count;
  Cycle head = ord.cycles[ja];
  const long w_head = ord.weights[ja];
  if (contains(head, n - 1) || w_head >= static_cast<long>(head.size())) return std::nullopt;

  Cycle sorted = head;
  std::sort(sorted.begin(), sorted.end());
  head = ending_with(head, sorted[w_head]);
  const Cycle tail = ending_with(ord.cycles[jn], n);
  Cycle merged = head;
  merged.insert(merged.end(), tail.begin(), tail.end());

  OrderedCycles out;
  for (std::size_t j = 0; j < count; ++j) {
    if (j == jn) continue;
    out.cycles.push_back(j == ja ? merged : ord.cycles[j]);
    out.weights.push_back(j == ja ? static_cast<long>(head.size()) - 1 : ord.weights[j]);
  }
  int loss = 0;
  try {
    loss = y.descents() - descents_of(n, out);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (loss != 0 && loss != 1) return std::nullopt;
  const std::size_t pos_low = position_of(out, n - 1);
  out.weights[pos_low] += w_head + ord.weights[jn] - (static_cast<long>(head.size()) - 1) + loss;
  if (out.weights[pos_low] < 0) return std::nullopt;
  return Cwp::from_ordered(n, out);
}

Cwp f2(const Cwp& x, const IntTuple& c_prime) {
  require_unit(c_prime);
  const PanContext ctx = context_of(x, c_prime);
  if (!in_s4(x, ctx)) throw std::invalid_argument("f2: input is not in S4: " + x.notation());
  const int n = x.n();

  OrderedCycles ord = x.ordered();
  const std::size_t j = position_of(ord, n);
  ord.cycles[j] = ending_with(ord.cycles[j], n);
  const Cycle& cyc = ord.cycles[j];
  const auto split = std::find(cyc.begin(), cyc.end(), n - 1) - cyc.begin() + 1;
  const long w = ord.weights[j];

  OrderedCycles out = split_cycle_in_order(ord, j, static_cast<std::size_t>(split));
  const int gain = descents_of(n, out) - x.descents();
  if (gain != 0 && gain != 1) throw std::logic_error("f2: descent change out of range");

  const std::size_t pos_high = position_of(out, n);
  const std::size_t pos_low = position_of(out, n - 1);
  const long w_high = low_csum(out.cycles[pos_high], c_prime, n);
  out.weights[pos_high] = w_high;
  out.weights[pos_low] = w - w_high - gain;
  return Cwp::from_ordered(n, out);
}

std::optional<Cwp> f2_inverse(const Cwp& y, const IntTuple& c_prime) {
  require_unit(c_prime);
  const int n = y.n();
  OrderedCycles ord = y.ordered();
  const std::size_t count = ord.cycles.size();
  if (count < 2) return std::nullopt;
  const std::size_t jn = position_of(ord, n);
  const std::size_t ja = (jn + count - 1) % count;
  if (!contains(ord.cycles[ja], n - 1)) return std::nullopt;

  Cycle merged = ending_with(ord.cycles[ja], n - 1);
  const Cycle tail = ending_with(ord.cycles[jn], n);
  merged.insert(merged.end(), tail.begin(), tail.end());

  OrderedCycles out;
  for (std::size_t j = 0; j < count; ++j) {
    if (j == jn) continue;
    out.cycles.push_back(j == ja ? merged : ord.cycles[j]);
    out.weights.push_back(ord.weights[j]);
  }
  int loss = 0;
  try {
    loss = y.descents() - descents_of(n, out);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (loss != 0 && loss != 1) return std::nullopt;
  const std::size_t pos = position_of(out, n);
  out.weights[pos] = ord.weights[ja] + ord.weights[jn] + loss;
  return Cwp::from_ordered(n, out);
}

Cwp positivity_witness(const Cwp& y) {
  const int base = y.n();
  if (!is_c_compatible(y, IntTuple::repeat(base, 1))) {
    throw std::invalid_argument("positivity_witness: input must be (1,...,1)-compatible");
  }
  OrderedCycles ord = y.ordered();
  const std::size_t j = position_of(ord, base);
  auto& cyc = ord.cycles[j];
  cyc.insert(std::find(cyc.begin(), cyc.end(), base) + 1, base + 1);
  return Cwp::from_ordered(base + 1, ord);
}

// ---------------------------------------------------------------------------

bool PositivityLevel::maps_ok() const {
  return f1_into_target && f1_injective && f1_roundtrip && f2_into_target && f2_injective &&
         f2_roundtrip && images_disjoint && f2_marker;
}

bool PositivityLevel::pass() const {
  const bool witness_ok = !witness_required || (witnesses > 0 && witnesses_valid);
  return maps_ok() && witness_ok && coefficient() == closed_coefficient;
}

bool PositivityReport::pass() const {
  return ehrhart_positive &&
         std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.pass(); });
}

namespace {

bool cycle_before_n_holds_low(const Cwp& y) {
  const auto ord = y.ordered();
  const std::size_t count = ord.cycles.size();
  const std::size_t jn = position_of(ord, y.n());
  return contains(ord.cycles[(jn + count - 1) % count], y.n() - 1);
}

}  // namespace

PositivityReport verify_positivity(int n, int k, const EnumerationOptions& opts) {
  if (n < 3 || k < 1 || k > n - 1) {
    throw std::invalid_argument("verify_positivity: need n >= 3 and 1 <= k <= n-1");
  }
  if (n > opts.cap) {
    throw ResourceError("verify_positivity: n=" + std::to_string(n) + " exceeds cap");
  }
  const IntTuple ones = IntTuple::repeat(n - 2, 1);
  PositivityReport report;
  report.n = n;
  report.k = k;
  report.ehrhart = ehrhart_pan5term_closed(k, IntTuple::repeat(n - 1, 1)).poly;
  report.degree = report.ehrhart.degree();

  for (int m = 0; m <= n - 1; ++m) {
    const PanContext ctx{n, m, k, ones};
    PositivityLevel lvl;
    lvl.m = m;
    lvl.closed_coefficient = pan_coefficient_closed(ctx);

    std::set<Cwp> target;  // S1 u S2
    std::vector<Cwp> s3, s4;
    enumerate_cwp(n, m + 1, k, nullptr, [&](const Cwp& x) {
      const bool a = in_s1(x, ctx), b = in_s2(x, ctx);
      if (a) lvl.s1 += 1;
      if (b) lvl.s2 += 1;
      if (a || b) target.insert(x);
    }, opts);
    if (m >= 1) {
      enumerate_cwp(n, m, k, nullptr, [&](const Cwp& x) {
        if (in_s3(x, ctx)) s3.push_back(x);
        if (in_s4(x, ctx)) s4.push_back(x);
      }, opts);
    }
    lvl.s3 = static_cast<unsigned long>(s3.size());
    lvl.s4 = static_cast<unsigned long>(s4.size());

    auto note = [&](const std::string& what, const Cwp& x) {
      if (!lvl.counterexample) lvl.counterexample = what + ": " + x.notation();
    };

    std::set<Cwp> im1, im2;
    for (const auto& x : s3) {
      const Cwp y = f1(x, ones);
      if (!target.count(y)) { lvl.f1_into_target = false; note("f1 leaves S1uS2", x); }
      if (!im1.insert(y).second) { lvl.f1_injective = false; note("f1 collision", x); }
      const auto back = f1_inverse(y, ones);
      if (!back || *back != x) { lvl.f1_roundtrip = false; note("f1 round trip", x); }
      if (cycle_before_n_holds_low(y)) { lvl.f2_marker = false; note("f1 image marker", x); }
    }
    for (const auto& x : s4) {
      const Cwp y = f2(x, ones);
      if (!target.count(y)) { lvl.f2_into_target = false; note("f2 leaves S1uS2", x); }
      if (!im2.insert(y).second) { lvl.f2_injective = false; note("f2 collision", x); }
      const auto back = f2_inverse(y, ones);
      if (!back || *back != x) { lvl.f2_roundtrip = false; note("f2 round trip", x); }
      if (!cycle_before_n_holds_low(y)) { lvl.f2_marker = false; note("f2 image marker", x); }
      if (im1.count(y)) { lvl.images_disjoint = false; note("images overlap", y); }
    }

    lvl.witness_required = m >= 2 && m < n - 1 && k <= n - 2;
    if (m < n - 1 && k <= n - 2) {
      enumerate_cwp(n - 1, m + 1, k,
                    [](const Cwp& y) { return is_c_compatible(y, IntTuple::repeat(y.n(), 1)); },
                    [&](const Cwp& y) {
                      const Cwp z = positivity_witness(y);
                      if (!target.count(z) || im1.count(z) || im2.count(z)) {
                        lvl.witnesses_valid = false;
                        note("witness", z);
                      } else {
                        lvl.witnesses += 1;
                      }
                    },
                    opts);
    }
    report.levels.push_back(std::move(lvl));
  }

  report.ehrhart_positive = true;
  for (long i = 0; i <= report.degree; ++i) {
    if (report.ehrhart.coeff(i) <= 0) report.ehrhart_positive = false;
  }
  report.reading_all_m = std::all_of(report.levels.begin(), report.levels.end(),
                                     [](const auto& l) { return l.coefficient() > 0; });
  report.reading_split = std::all_of(report.levels.begin(), report.levels.end(),
                                     [&](const auto& l) {
                                       return (k == n - 1 && l.m > 2) || l.coefficient() > 0;
                                     });
  return report;
}

}  // namespace wmh
