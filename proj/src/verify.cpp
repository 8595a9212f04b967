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

#include "wmh/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "wmh/bijections.hpp"
#include "wmh/combinatorics.hpp"
#include "wmh/errors.hpp"
#include "wmh/pan_sets.hpp"
#include "wmh/polytopes.hpp"

namespace wmh {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.pass; }));
}

Json SuiteReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["pass"] = pass();
  out["checked"] = instances.size();
  out["failed"] = failures();
  const auto first = std::find_if(instances.begin(), instances.end(),
                                  [](const auto& r) { return !r.pass; });
  if (first != instances.end()) {
    out["first_failure"] = first->key;
    if (first->counterexample) out["counterexample"] = *first->counterexample;
  }
  if (!notes.empty()) out["notes"] = notes;
  Json rows = Json::array();
  for (const auto& r : instances) {
    Json row = r.key;
    row["pass"] = r.pass;
    for (const auto& [name, value] : r.detail.items()) row[name] = value;
    if (r.counterexample) row["counterexample"] = *r.counterexample;
    rows.push_back(std::move(row));
  }
  out["instances"] = std::move(rows);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"combint",   "main",       "positivity",
                                                 "worpitzky", "identities", "methods"};
  return names;
}

std::vector<IntTuple> all_tuples(std::size_t len, int max_entry) {
  std::vector<IntTuple> out;
  if (max_entry < 1) return out;
  std::vector<int> v(len, 1);
  while (true) {
    out.emplace_back(v);
    std::size_t i = len;
    while (i > 0 && v[i - 1] == max_entry) v[--i] = 1;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

namespace {

void require_cap(int n, const VerifyRanges& r) {
  if (n > r.enumeration.cap) {
    throw ResourceError("verify: n = " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(r.enumeration.cap));
  }
}

std::string str(const BigInt& z) { return to_string(z); }

BigInt coeff_at(const std::vector<BigInt>& scaled, int m) {
  return static_cast<std::size_t>(m) < scaled.size() ? scaled[m] : BigInt(0);
}

Json poly_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& q : p.coeffs()) arr.push_back(to_string(q));
  return arr;
}

}  // namespace

SuiteReport verify_combint(const VerifyRanges& r) {
  require_cap(r.n_max, r);
  SuiteReport rep{"combint", {}, Json::object()};
  for (int n = 2; n <= r.n_max; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const auto scaled = scaled_integer_coeffs(ehrhart_hypersimplex_closed(k, n).poly, n);
      for (int m = 0; m <= n - 1; ++m) {
        const BigInt got = coeff_hypersimplex_comb(n, m, k, r.enumeration);
        const BigInt want = coeff_at(scaled, m);
        rep.instances.push_back({Json{{"family", "hypersimplex"}, {"n", n}, {"k", k}, {"m", m}},
                                 got == want,
                                 Json{{"enumerated", str(got)}, {"closed", str(want)}},
                                 std::nullopt});
      }
    }
  }
  for (int n = 1; n <= r.n_max; ++n) {
    for (const auto& c : all_tuples(n, r.c_max)) {
      for (int k = 1; k < c.sum(); ++k) {
        const auto scaled = scaled_integer_coeffs(ehrhart_rkc_closed(k, c).poly, n);
        for (int m = 0; m <= n - 1; ++m) {
          const BigInt got = coeff_rkc_comb(c, m, k, r.enumeration);
          const BigInt want = coeff_at(scaled, m);
          rep.instances.push_back(
              {Json{{"family", "rkc"}, {"c", c.to_string()}, {"k", k}, {"m", m}}, got == want,
               Json{{"enumerated", str(got)}, {"closed", str(want)}}, std::nullopt});
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_main(const VerifyRanges& r) {
  require_cap(r.n_max, r);
  SuiteReport rep{"main", {}, Json::object()};
  for (int n = 3; n <= r.n_max; ++n) {
    for (const auto& cp : all_tuples(n - 2, r.c_prime_max)) {
      // beyond sum(c') + 1 the polytope is empty and every set is too
      for (int k = 1; k <= cp.sum() + 1; ++k) {
        for (int m = 0; m <= n - 1; ++m) {
          const PanContext ctx{n, m, k, cp};
          const SCounts s = count_s_sets(ctx, r.enumeration);
          const ACounts a = count_a_sets(ctx, r.enumeration);
          const BigInt closed = pan_coefficient_closed(ctx);
          const BigInt upper = a.from_sets[0] + a.from_sets[1] + a.from_sets[2];
          const BigInt lower = a.from_sets[3] + a.from_sets[4];
          const bool ok = s.signed_sum() == closed && a.terms_agree() &&
                          upper == s.s1 + s.s2 && lower == -s.s3 - s.s4;
          Json formula = Json::array();
          for (const auto& v : a.formula) formula.push_back(str(v));
          rep.instances.push_back(
              {Json{{"n", n}, {"k", k}, {"m", m}, {"c_prime", cp.to_string()}}, ok,
               Json{{"s", {str(s.s1), str(s.s2), str(s.s3), str(s.s4)}},
                    {"signed_sum", str(s.signed_sum())},
                    {"closed", str(closed)},
                    {"a_terms", formula},
                    {"a_sets_agree", a.terms_agree()}},
               std::nullopt});
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_positivity_suite(const VerifyRanges& r) {
  require_cap(r.n_max, r);
  SuiteReport rep{"positivity", {}, Json::object()};
  Json readings = Json::array();
  for (int n = 3; n <= r.n_max; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const PositivityReport pr = verify_positivity(n, k, r.enumeration);
      for (const auto& lv : pr.levels) {
        rep.instances.push_back(
            {Json{{"n", n}, {"k", k}, {"m", lv.m}}, lv.pass(),
             Json{{"s", {str(lv.s1), str(lv.s2), str(lv.s3), str(lv.s4)}},
                  {"coefficient", str(lv.coefficient())},
                  {"closed", str(lv.closed_coefficient)},
                  {"f1_injective", lv.f1_injective},
                  {"f2_injective", lv.f2_injective},
                  {"images_in_target", lv.f1_into_target && lv.f2_into_target},
                  {"roundtrip", lv.f1_roundtrip && lv.f2_roundtrip},
                  {"images_disjoint", lv.images_disjoint},
                  {"witness_required", lv.witness_required},
                  {"witnesses", str(lv.witnesses)}},
             lv.counterexample});
      }
      rep.instances.push_back({Json{{"n", n}, {"k", k}, {"m", "all"}}, pr.ehrhart_positive,
                               Json{{"ehrhart", poly_json(pr.ehrhart)},
                                    {"degree", pr.degree},
                                    {"positive_up_to_degree", pr.ehrhart_positive}},
                               std::nullopt});
      readings.push_back(Json{{"n", n},
                              {"k", k},
                              {"positive_all_m", pr.reading_all_m},
                              {"positive_split_reading", pr.reading_split}});
    }
  }
  // Both literal readings of the range of m are recorded, not enforced.
  rep.notes["hypothesis_readings"] = std::move(readings);
  return rep;
}

SuiteReport verify_worpitzky(const VerifyRanges& r) {
  SuiteReport rep{"worpitzky", {}, Json::object()};
  for (int k = 1; k <= r.max; ++k) {
    for (int m = 1; m <= r.max; ++m) {
      const BigInt power = ipow(BigInt(k), static_cast<unsigned>(m));
      BigInt eulerian_side = 0;
      for (int i = 0; i <= m - 1; ++i) eulerian_side += eulerian(m, i) * binomial(k + i, m);
      // pairs (p, w): p of [m+1] ending in 1, des(p) + |w| = k
      BigInt pairs = 0;
      const auto dist = last_one_descent_distribution(m + 1);
      for (std::size_t d = 0; d < dist.size(); ++d) {
        pairs += dist[d] * binomial(k - static_cast<long>(d) + m, m);
      }
      rep.instances.push_back(
          {Json{{"k", k}, {"m", m}}, eulerian_side == power && pairs == power,
           Json{{"power", str(power)}, {"eulerian_sum", str(eulerian_side)}, {"pairs", str(pairs)}},
           std::nullopt});
    }
  }
  return rep;
}

SuiteReport verify_identities(const VerifyRanges& r) {
  SuiteReport rep{"identities", {}, Json::object()};
  const int stirling_max = std::max(10, r.n_max);
  for (int n = 1; n <= stirling_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      const BigInt p = elem_sym_range(n - m, 1, n - 1);
      const BigInt s = stirling_first(n, m);
      rep.instances.push_back({Json{{"identity", "stirling"}, {"n", n}, {"m", m}}, p == s,
                               Json{{"elem_sym", str(p)}, {"stirling", str(s)}}, std::nullopt});
    }
  }
  for (int n = 2; n <= r.n_max; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const UniPoly ehr = ehrhart_hypersimplex_closed(k, n).poly;
      const auto scaled = scaled_integer_coeffs(ehr, n);
      for (int m = 0; m <= n - 1; ++m) {
        BigInt conv = 0;
        for (int l = 0; l <= k - 1; ++l) conv += weighted_lah(n, m + 1, l) * eulerian(m, k - 1 - l);
        const BigInt want = coeff_at(scaled, m);
        rep.instances.push_back(
            {Json{{"identity", "lah_convolution"}, {"n", n}, {"k", k}, {"m", m}}, conv == want,
             Json{{"convolution", str(conv)}, {"closed", str(want)}}, std::nullopt});
      }
      const Rational at_zero = ehr.eval(0);
      rep.instances.push_back({Json{{"identity", "constant_term"}, {"n", n}, {"k", k}},
                               at_zero == 1, Json{{"value", to_string(at_zero)}}, std::nullopt});
      const BigInt lead = coeff_at(scaled, n - 1);
      const BigInt a = eulerian(n - 1, k - 1);
      rep.instances.push_back({Json{{"identity", "leading_eulerian"}, {"n", n}, {"k", k}},
                               lead == a, Json{{"leading", str(lead)}, {"eulerian", str(a)}},
                               std::nullopt});
      const UniPoly mirror = ehrhart_hypersimplex_closed(n - k, n).poly;
      bool counts_match = true;
      for (long t = 1; t <= 3; ++t) {
        counts_match = counts_match && lattice_count(PolytopeSpec::hypersimplex(k, n), t) ==
                                           lattice_count(PolytopeSpec::hypersimplex(n - k, n), t);
      }
      rep.instances.push_back({Json{{"identity", "symmetry"}, {"n", n}, {"k", k}},
                               ehr == mirror && counts_match,
                               Json{{"ehrhart", poly_json(ehr)}, {"mirror", poly_json(mirror)}},
                               std::nullopt});
    }
  }
  const int lah_max = std::min(r.n_max, r.enumeration.cap);
  for (int n = 1; n <= lah_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int l = 0; l <= n - m; ++l) {
        const BigInt rec = weighted_lah(n, m, l);
        const BigInt enumerated = weighted_lah_enumerated(n, m, l, r.enumeration);
        rep.instances.push_back(
            {Json{{"identity", "weighted_lah"}, {"n", n}, {"m", m}, {"l", l}}, rec == enumerated,
             Json{{"recurrence", str(rec)}, {"enumerated", str(enumerated)}}, std::nullopt});
      }
    }
  }
  return rep;
}

namespace {

std::vector<PolytopeSpec> method_specs(const VerifyRanges& r) {
  std::vector<PolytopeSpec> specs;
  for (int n = 2; n <= r.n_max; ++n) {
    for (int k = 1; k <= n - 1; ++k) specs.push_back(PolytopeSpec::hypersimplex(k, n));
    for (const auto& c : all_tuples(n, r.c_max)) {
      if (c.all_ones()) continue;  // already listed as a hypersimplex
      for (int k = 1; k <= n - 1; ++k) specs.push_back(PolytopeSpec::r_kc(k, c));
    }
    for (int rr = 0; rr <= n - 2; ++rr) {
      for (int k = 1; k <= n - 1; ++k) specs.push_back(PolytopeSpec::panhandle(k, rr, n));
    }
    if (n >= 3) {
      for (const auto& cp : all_tuples(n - 2, r.c_max)) {
        if (cp.all_ones()) continue;  // the panhandle with r = n - 2
        for (int k = 1; k <= n - 1; ++k) specs.push_back(PolytopeSpec::pan_target(k, n, cp));
      }
    }
  }
  return specs;
}

}  // namespace

SuiteReport verify_methods(const VerifyRanges& r) {
  SuiteReport rep{"methods", {}, Json::object()};
  for (const auto& spec : method_specs(r)) {
    const auto brute = ehrhart_interpolated(spec, Counter::brute);
    const auto genfun = ehrhart_interpolated(spec, Counter::genfun);
    Json detail;
    bool ok = brute.has_value() == genfun.has_value();
    if (!brute || !genfun) {
      detail["empty"] = !brute && !genfun;
    } else {
      ok = ok && brute->poly == genfun->poly;
      detail["ehrhart"] = poly_json(brute->poly);
      Json closed = Json::array();
      const int k = spec.k();
      if (spec.is_hypersimplex() && k <= spec.n() - 1) {
        ok = ok && ehrhart_hypersimplex_closed(k, spec.n()).poly == brute->poly;
        closed.push_back(to_string(EhrhartMethod::closed_hypersimplex));
      }
      if (spec.is_rkc() && k < spec.c().sum()) {
        ok = ok && ehrhart_rkc_closed(k, spec.c()).poly == brute->poly;
        closed.push_back(to_string(EhrhartMethod::closed_rkc));
      }
      if (spec.is_pan_shape() && spec.c().values().back() == 1) {
        ok = ok && ehrhart_pan5term_closed(k, spec.c()).poly == brute->poly;
        closed.push_back(to_string(EhrhartMethod::closed_pan5term));
      }
      detail["closed_forms"] = std::move(closed);
    }
    rep.instances.push_back({Json{{"spec", spec.to_string()}}, ok, std::move(detail), std::nullopt});
  }
  // The two constructions of each generating-function factor.
  for (int a = 1; a <= 4; ++a) {
    for (int c = 1; c <= r.c_max; ++c) {
      for (long t = 1; t <= 4; ++t) {
        const std::size_t bound = static_cast<std::size_t>(c * t + a + 2);
        const TruncSeries series = genfun_factor(a, c, t, bound);
        const TruncSeries derived = genfun_factor_derivative(a, c, t, bound);
        rep.instances.push_back({Json{{"factor", Json{{"a", a}, {"c", c}, {"t", t}}}},
                                 series.coeffs() == derived.coeffs(), Json::object(),
                                 std::nullopt});
      }
    }
  }
  return rep;
}

SuiteReport run_suite(std::string_view suite, const VerifyRanges& ranges) {
  if (suite == "combint") return verify_combint(ranges);
  if (suite == "main") return verify_main(ranges);
  if (suite == "positivity") return verify_positivity_suite(ranges);
  if (suite == "worpitzky") return verify_worpitzky(ranges);
  if (suite == "identities") return verify_identities(ranges);
  if (suite == "methods") return verify_methods(ranges);
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

}  // namespace wmh
