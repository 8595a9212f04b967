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

#include <random>
#include <vector>

#include "wmh/exactmath.hpp"

using namespace wmh;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

UniPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 5);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = q(num(rng), den(rng));
  return UniPoly(c);
}

}  // namespace

TEST_SUITE("exactmath") {

TEST_CASE("rationals are canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(make_rational(0, -5).get_den() == 1);
  CHECK(to_string(q(3, 1)) == "3");
  CHECK(to_string(q(-7, 14)) == "-1/2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(ipow(BigInt(3), 4) == 81);
  CHECK(ipow(BigInt(0), 0) == 1);
}

TEST_CASE("poly arithmetic") {
  const UniPoly t_plus_1{q(1), q(1)};
  const UniPoly t_minus_1{q(-1), q(1)};
  CHECK(poly_arith(t_plus_1, t_minus_1, PolyOp::mul) == UniPoly{q(-1), q(0), q(1)});
  CHECK(poly_arith(t_plus_1, UniPoly{}, PolyOp::add) == t_plus_1);
  CHECK(poly_scale(UniPoly{q(0), q(1, 2)}, q(2)) == UniPoly{q(0), q(1)});
  CHECK(poly_arith(t_plus_1, t_plus_1, PolyOp::sub).is_zero());
  CHECK(UniPoly{q(1), q(0), q(0)}.degree() == 0);
  CHECK(UniPoly{}.degree() == -1);
  CHECK(UniPoly{q(1), q(3, 2), q(1, 2)}.to_string() == "1/2 t^2 + 3/2 t + 1");
  CHECK(UniPoly{q(-1), q(0), q(-2)}.to_string() == "-2 t^2 - 1");
  CHECK(UniPoly{}.to_string() == "0");
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<long> pt(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly p = random_poly(rng);
    const UniPoly r = random_poly(rng);
    const Rational t0 = q(pt(rng), 1 + (trial % 3));
    CHECK((p * r).eval(t0) == p.eval(t0) * r.eval(t0));
    CHECK((p + r).eval(t0) == p.eval(t0) + r.eval(t0));
  }
}

TEST_CASE("binomial_poly") {
  CHECK(binomial_poly(UniPoly::linear(1, 2), 2) == UniPoly{q(1), q(3, 2), q(1, 2)});
  CHECK(binomial_poly(UniPoly::linear(5, -7), 0) == UniPoly::constant(1));
  CHECK(binomial_poly(UniPoly::linear(2, 3), 3).eval(1) == 10);
  CHECK_THROWS_AS(binomial_poly(UniPoly{q(0), q(0), q(1)}, 2), std::invalid_argument);
  for (long slope = -2; slope <= 3; ++slope) {
    for (long icpt = -4; icpt <= 4; ++icpt) {
      for (unsigned d = 0; d <= 5; ++d) {
        const UniPoly b = binomial_poly(UniPoly::linear(slope, icpt), d);
        for (long t = 0; t <= 6; ++t) {
          const long arg = slope * t + icpt;
          if (arg < 0) continue;
          // arg in 0..d-1 falls out of the factorial form as zero
          CHECK(b.eval(t) == binomial(arg, d));
        }
      }
    }
  }
}

TEST_CASE("lagrange interpolation") {
  using Pts = std::vector<std::pair<long, BigInt>>;
  const Pts line{{0, 1}, {1, 3}, {2, 5}};
  CHECK(lagrange_interpolate(line) == UniPoly{q(1), q(2)});
  const Pts one{{0, 1}};
  CHECK(lagrange_interpolate(one) == UniPoly::constant(1));
  const Pts hyper{{0, 1}, {1, 6}, {2, 19}, {3, 44}, {4, 85}};
  CHECK(lagrange_interpolate(hyper) == UniPoly{q(1), q(7, 3), q(2), q(2, 3)});
  const Pts dup{{1, 1}, {1, 2}};
  CHECK_THROWS_AS(lagrange_interpolate(dup), std::invalid_argument);
  CHECK_THROWS_AS(lagrange_interpolate(Pts{}), std::invalid_argument);

  SUBCASE("round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      // integer-valued at integers: integer combination of binomials
      UniPoly p;
      std::uniform_int_distribution<long> cf(-5, 5);
      const unsigned deg = trial % 6;
      for (unsigned d = 0; d <= deg; ++d) p += cf(rng) * binomial_poly(UniPoly::linear(1, 0), d);
      Pts pts;
      for (long t = -2; t <= static_cast<long>(deg); ++t) {
        const Rational v = p.eval(t);
        REQUIRE(v.get_den() == 1);
        pts.emplace_back(t, v.get_num());
      }
      CHECK(lagrange_interpolate(pts) == p);
    }
  }
}

TEST_CASE("truncated series") {
  const TruncSeries a(2, {1, 1, 1});
  const TruncSeries b(2, {1, 1, 0});
  CHECK((a * b).coeffs() == std::vector<BigInt>{1, 2, 2});
  CHECK(series_ops(a, SeriesOp::mul, &b) == a * b);
  CHECK(a.derivative().coeffs() == std::vector<BigInt>{1, 2, 0});
  CHECK(series_ops(a, SeriesOp::derivative) == a.derivative());
  CHECK(series_ops(a, SeriesOp::scale, nullptr, 3).coeffs() == std::vector<BigInt>{3, 3, 3});
  CHECK_THROWS_AS(a * TruncSeries(3), std::invalid_argument);
  CHECK_THROWS_AS(series_ops(a, SeriesOp::mul), std::invalid_argument);

  const TruncSeries num = TruncSeries::geometric(6, 1) - TruncSeries::monomial(6, 5, 1);
  CHECK(num.divided_by_one_minus_x().coeffs() == std::vector<BigInt>{1, 1, 1, 1, 1, 0, 0});
  CHECK(TruncSeries::geometric(6, 5) == num.divided_by_one_minus_x());
  CHECK(TruncSeries::monomial(3, 5, 2).coeffs() == std::vector<BigInt>{0, 0, 0, 0});
  CHECK(TruncSeries(2, {2, 4, 6}).divided_exact(2).coeffs() == std::vector<BigInt>{1, 2, 3});
  CHECK_THROWS_AS(TruncSeries(2, {2, 3, 6}).divided_exact(2), std::domain_error);
  CHECK(a.truncated(4).coeffs() == std::vector<BigInt>{1, 1, 1, 0, 0});
  CHECK(a.truncated(1).coeffs() == std::vector<BigInt>{1, 1});
}

TEST_CASE("series product rule below the bound") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> cf(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t bound = 3 + trial % 6;
    std::vector<BigInt> u(bound + 1), v(bound + 1);
    for (auto& x : u) x = cf(rng);
    for (auto& x : v) x = cf(rng);
    const TruncSeries f(bound, u), g(bound, v);
    const TruncSeries lhs = (f * g).derivative();
    const TruncSeries rhs = f.derivative() * g + f * g.derivative();
    // truncation of the derivative loses the top coefficient only
    for (std::size_t i = 0; i < bound; ++i) CHECK(lhs[i] == rhs[i]);
  }
}

}  // TEST_SUITE
