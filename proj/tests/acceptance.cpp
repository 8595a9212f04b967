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

// Acceptance run: one line per criterion, exact comparisons throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wmh/bijections.hpp"
#include "wmh/pan_sets.hpp"
#include "wmh/polytopes.hpp"
#include "wmh/verify.hpp"

using namespace wmh;

namespace {

struct Outcome {
  long checked = 0;
  long failed = 0;
  std::string first_failure;
  std::string extra;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
};

BigInt coeff(const std::vector<BigInt>& scaled, int m) {
  return m < static_cast<int>(scaled.size()) ? scaled[m] : BigInt(0);
}

// 1. brute interpolation, generating-function interpolation and every closed
// form that applies agree on all constructor specs up to n = 7.
Outcome methods() {
  Outcome o;
  std::vector<PolytopeSpec> specs;
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      specs.push_back(PolytopeSpec::hypersimplex(k, n));
      for (const auto& c : all_tuples(n, 3)) {
        if (!c.all_ones()) specs.push_back(PolytopeSpec::r_kc(k, c));
      }
      for (int r = 0; r <= n - 2; ++r) specs.push_back(PolytopeSpec::panhandle(k, r, n));
      if (n >= 3) {
        for (const auto& cp : all_tuples(n - 2, 3)) {
          if (!cp.all_ones()) specs.push_back(PolytopeSpec::pan_target(k, n, cp));
        }
      }
    }
  }
  long feasible = 0;
  for (const auto& spec : specs) {
    const auto brute = ehrhart_interpolated(spec, Counter::brute);
    const auto genfun = ehrhart_interpolated(spec, Counter::genfun);
    const auto where = [&] { return spec.to_string(); };
    o.check(brute.has_value() == genfun.has_value(), where);
    if (!brute || !genfun) continue;
    ++feasible;
    o.check(brute->poly == genfun->poly, where);
    const int k = spec.k();
    if (spec.is_hypersimplex() && k <= spec.n() - 1) {
      o.check(ehrhart_hypersimplex_closed(k, spec.n()).poly == brute->poly, where);
    }
    if (spec.is_rkc() && k < spec.c().sum()) {
      o.check(ehrhart_rkc_closed(k, spec.c()).poly == brute->poly, where);
    }
    if (spec.is_pan_shape() && spec.c()[spec.c().size() - 1] == 1) {
      o.check(ehrhart_pan5term_closed(k, spec.c()).poly == brute->poly, where);
    }
    for (long t = 1; t <= 4; ++t) {
      o.check(lattice_count(spec, t) == ehrhart_genfun_count(spec, t), where);
    }
  }
  o.extra = std::to_string(specs.size()) + " specs, " + std::to_string(feasible) + " feasible";
  return o;
}

// 2. (1,...,1)-compatible objects of type (n, m+1, k), counted without any
// pruning, against the hypersimplex coefficients.
Outcome hypersimplex_counts() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    const IntTuple ones = IntTuple::repeat(n, 1);
    for (int k = 1; k <= n - 1; ++k) {
      const auto scaled = scaled_integer_coeffs(ehrhart_hypersimplex_closed(k, n).poly, n);
      for (int m = 0; m <= n - 1; ++m) {
        const BigInt got = enumerate_cwp(n, m + 1, k, [&ones](const Cwp& x) {
          return is_c_compatible(x, ones);
        });
        o.check(got == coeff(scaled, m), [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
                 ": " + to_string(got) + " vs " + to_string(coeff(scaled, m));
        });
      }
    }
  }
  return o;
}

// 3. c-compatible counts against the R_{k,c} coefficients. The pruning bound
// sits one above the compatibility boundary so the predicate decides it.
Outcome rkc_counts() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : all_tuples(n, 3)) {
      for (int k = 1; k < c.sum(); ++k) {
        const auto scaled = scaled_integer_coeffs(ehrhart_rkc_closed(k, c).poly, n);
        for (int m = 0; m <= n - 1; ++m) {
          const BigInt got = enumerate_cwp_capped(
              n, m + 1, k, [&c](const Cwp& x) { return is_c_compatible(x, c); },
              [&c](const Cycle& cyc) { return cycle_csum(cyc, c); });
          o.check(got == coeff(scaled, m), [&] {
            return "c=" + c.to_string() + " k=" + std::to_string(k) + " m=" + std::to_string(m);
          });
        }
      }
    }
  }
  return o;
}

// 4. |S1| + |S2| - |S3| - |S4| against the coefficients of
// Delta_{k,(1^(n-2),2),(c',1)} for every k with a nonempty polytope. The
// first k past that range is tallied separately: there is no polynomial to
// compare with, only the observation whether the signed sum vanishes.
Outcome signed_sums() {
  Outcome o;
  long exceptional = 0;
  long beyond = 0;
  long beyond_nonzero = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& cp : all_tuples(n - 2, 2)) {
      for (int k = 1; k <= cp.sum() + 2; ++k) {
        const auto interp =
            ehrhart_interpolated(PolytopeSpec::pan_target(k, n, cp), Counter::brute);
        const bool feasible = k <= cp.sum() + 1;
        o.check(interp.has_value() == feasible, [&] { return "feasibility at k=" + std::to_string(k); });
        const auto scaled =
            interp ? scaled_integer_coeffs(interp->poly, n) : std::vector<BigInt>{};
        for (int m = 0; m <= n - 1; ++m) {
          const PanContext ctx{n, m, k, cp};
          const SCounts s = count_s_sets(ctx);
          if (!feasible) {
            ++beyond;
            beyond_nonzero += s.signed_sum() != 0;
            continue;
          }
          exceptional += ctx.exceptional();
          const BigInt want = coeff(scaled, m);
          o.check(s.signed_sum() == want && pan_coefficient_closed(ctx) == want, [&] {
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" +
                   std::to_string(m) + " c'=" + cp.to_string() + ": " +
                   to_string(s.signed_sum()) + " vs " + to_string(want);
          });
          if (m <= 1) o.check(s.s4 == 0 && (m == 1 || s.s3 == 0), [&] { return "low-level sets"; });
        }
      }
    }
  }
  o.extra = std::to_string(exceptional) + " exceptional instances; empty range k = sum(c')+2: " +
            std::to_string(beyond_nonzero) + " of " + std::to_string(beyond) +
            " signed sums nonzero (not compared)";
  return o;
}

// 5. Injections, disjointness, witnesses and positive coefficients, c' = 1.
Outcome positivity() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const PositivityReport r = verify_positivity(n, k);
      for (const auto& lv : r.levels) {
        o.check(lv.pass(), [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " m=" +
                 std::to_string(lv.m) + (lv.counterexample ? " " + *lv.counterexample : "");
        });
      }
      o.check(r.ehrhart_positive, [&] {
        return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " ehr=" + r.ehrhart.to_string();
      });
    }
  }
  return o;
}

// 6. Worpitzky, Stirling, Lah convolution, constant and leading terms, symmetry.
Outcome identities() {
  Outcome o;
  VerifyRanges r;
  r.n_max = 7;
  r.max = 8;
  for (const auto* suite : {"worpitzky", "identities"}) {
    const SuiteReport rep = run_suite(suite, r);
    for (const auto& inst : rep.instances) {
      o.check(inst.pass, [&] { return std::string(suite) + " " + inst.key.dump(); });
    }
  }
  return o;
}

// 7. Derivative-form and binomial-series factors, coefficient by coefficient.
Outcome factors() {
  Outcome o;
  for (int a = 1; a <= 4; ++a) {
    for (int c = 1; c <= 3; ++c) {
      for (long t = 1; t <= 4; ++t) {
        const std::size_t bound = static_cast<std::size_t>(c * t + a + 2);
        const TruncSeries lhs = genfun_factor(a, c, t, bound);
        const TruncSeries rhs = genfun_factor_derivative(a, c, t, bound);
        for (std::size_t i = 0; i <= bound; ++i) {
          o.check(lhs[i] == rhs[i], [&] {
            return "a=" + std::to_string(a) + " c=" + std::to_string(c) + " t=" +
                   std::to_string(t) + " x^" + std::to_string(i);
          });
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "four-way method agreement, n <= 7, c <= 3", methods},
      {2, "hypersimplex coefficients count compatible objects, n <= 7", hypersimplex_counts},
      {3, "R_{k,c} coefficients count c-compatible objects, n <= 6, c <= 3", rkc_counts},
      {4, "signed S-set sums, 3 <= n <= 6, c' <= 2", signed_sums},
      {5, "injections, witnesses and positivity, c' = 1, n <= 6", positivity},
      {6, "identity suite", identities},
      {7, "derivative-form factors, a <= 4, c <= 3, t <= 4", factors},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && o.failed == 0 && o.checked > 0;
    failures += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
              << o.checked << " checks, " << o.failed << " failed";
    if (!o.extra.empty()) std::cout << ", " << o.extra;
    std::cout << ", " << timing << "]\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    if (o.failed) std::cout << "    first failure: " << o.first_failure << "\n";
  }
  return failures == 0 ? 0 : 1;
}
