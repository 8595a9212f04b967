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

#include <doctest.h>

#include "oracle.hpp"
#include "wmh/pan_sets.hpp"
#include "wmh/polytopes.hpp"
#include "wmh/verify.hpp"

using namespace wmh;

namespace {

BigInt interp_coeff(int n, int k, const IntTuple& cp, int m) {
  const auto r = ehrhart_interpolated(PolytopeSpec::pan_target(k, n, cp), Counter::brute);
  if (!r) return 0;
  const auto scaled = scaled_integer_coeffs(r->poly, n);
  return m < static_cast<int>(scaled.size()) ? scaled[m] : BigInt(0);
}

}  // namespace

TEST_SUITE("pan_sets") {

TEST_CASE("context validation") {
  CHECK_THROWS_AS((PanContext{2, 0, 1, IntTuple{}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((PanContext{4, 0, 1, IntTuple{1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((PanContext{4, -1, 1, IntTuple{1, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((PanContext{4, 0, 0, IntTuple{1, 1}}).validate(), std::invalid_argument);
  CHECK((PanContext{4, 0, 3, IntTuple{1, 1}}).exceptional());
  CHECK((PanContext{4, 0, 4, IntTuple{2, 1}}).exceptional());
  CHECK_FALSE((PanContext{4, 1, 3, IntTuple{1, 1}}).exceptional());
  CHECK(low_csum({1, 5, 3}, IntTuple{2, 1, 4}, 5) == 6);
}

TEST_CASE("single cycle levels") {
  for (int n = 3; n <= 6; ++n) {
    const IntTuple ones = IntTuple::repeat(n - 2, 1);
    for (int k = 1; k < n - 1; ++k) {
      const SCounts s = count_s_sets(PanContext{n, 0, k, ones});
      CHECK(s.s1 == factorial(n - 1));
      CHECK(s.s2 == 0);
      CHECK(s.s3 == 0);
      CHECK(s.s4 == 0);
    }
    // the exceptional clause
    const SCounts e = count_s_sets(PanContext{n, 0, n - 1, ones});
    CHECK(e.s1 == factorial(n - 1));
  }
}

TEST_CASE("small instances against lattice counts") {
  const PanContext ctx{4, 1, 2, IntTuple{1, 1}};
  const SCounts s = count_s_sets(ctx);
  CHECK(s.signed_sum() == 13);
  CHECK(s.signed_sum() == interp_coeff(4, 2, IntTuple{1, 1}, 1));
  const ACounts a = count_a_sets(ctx);
  BigInt total = 0;
  for (const auto& v : a.formula) total += v;
  CHECK(total == s.signed_sum());
  CHECK(a.terms_agree());
}

TEST_CASE("empty sets at low levels") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& cp : all_tuples(n - 2, 2)) {
      for (int k = 1; k <= cp.sum() + 1; ++k) {
        for (int m = 0; m <= 1; ++m) {
          const SCounts s = count_s_sets(PanContext{n, m, k, cp});
          CHECK(s.s4 == 0);
          if (m == 0) CHECK(s.s3 == 0);
        }
        const auto f = a_terms_formula(PanContext{n, 0, k, cp});
        CHECK(f[3] == 0);
        CHECK(f[4] == 0);
        if (k < 2) {
          for (int m = 0; m < n; ++m) CHECK(count_a_sets(PanContext{n, m, k, cp}).A2p == 0);
        }
      }
    }
  }
}

TEST_CASE("signed sums are the coefficients") {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& cp : all_tuples(n - 2, 2)) {
      for (int k = 1; k <= cp.sum() + 1; ++k) {
        for (int m = 0; m <= n - 1; ++m) {
          const PanContext ctx{n, m, k, cp};
          const SCounts s = count_s_sets(ctx);
          CHECK(s.signed_sum() == pan_coefficient_closed(ctx));
          CHECK(s.signed_sum() == interp_coeff(n, k, cp, m));
          const ACounts a = count_a_sets(ctx);
          CHECK(a.terms_agree());
          CHECK(a.from_sets[0] + a.from_sets[1] + a.from_sets[2] == s.s1 + s.s2);
          CHECK(a.from_sets[3] + a.from_sets[4] == -s.s3 - s.s4);
        }
      }
    }
  }
}

TEST_CASE("set counts match naive membership") {
  // the pruned enumeration only skips objects no set can hold
  for (int n = 3; n <= 5; ++n) {
    for (const auto& cp : all_tuples(n - 2, 2)) {
      for (int k = 1; k <= cp.sum() + 1; ++k) {
        for (int m = 0; m <= n - 1; ++m) {
          const PanContext ctx{n, m, k, cp};
          const SCounts s = count_s_sets(ctx);
          long s1 = 0, s2 = 0, s3 = 0, s4 = 0;
          for (const auto& x : oracle::all_cwp(n, m + 1, k)) {
            s1 += in_s1(x, ctx);
            s2 += in_s2(x, ctx);
          }
          if (m >= 1) {
            for (const auto& x : oracle::all_cwp(n, m, k)) {
              s3 += in_s3(x, ctx);
              s4 += in_s4(x, ctx);
            }
          }
          CHECK(s.s1 == s1);
          CHECK(s.s2 == s2);
          CHECK(s.s3 == s3);
          CHECK(s.s4 == s4);
        }
      }
    }
  }
}

TEST_CASE("membership checks the type") {
  const PanContext ctx{4, 1, 2, IntTuple{1, 1}};
  const Cwp wrong = Cwp::make(4, {{1, 2, 3, 4}}, {1}, {2});  // one cycle, m + 1 = 2
  CHECK_FALSE(in_s1(wrong, ctx));
  CHECK_FALSE(in_s2(wrong, ctx));
  CHECK_FALSE(in_a1(wrong, ctx));
  // type (4, 1, 2) with 3 and 4 together: neither S3 nor, at m = 1, S4
  CHECK_FALSE(in_s3(wrong, ctx));
  CHECK_FALSE(in_s4(wrong, ctx));
}

}  // TEST_SUITE
