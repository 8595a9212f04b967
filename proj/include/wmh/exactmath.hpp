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

// Exact arithmetic substrate: GMP-backed integers and rationals, dense
// univariate polynomials in t, and truncated power series in x.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wmh {

using BigInt = mpz_class;
/// Always kept canonical: positive denominator, reduced, zero is 0/1.
using Rational = mpq_class;

/// num/den reduced to canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Renders "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned n);
/// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt ipow(const BigInt& base, unsigned exp);

/// Dense polynomial in t with rational coefficients, ascending powers.
/// The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  /// slope * t + intercept
  static UniPoly linear(const Rational& slope, const Rational& intercept);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^i, zero past the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  Rational eval(const Rational& t) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
  friend UniPoly operator*(UniPoly lhs, const Rational& s) { return lhs *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly rhs) { return rhs *= s; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// "1/2 t^2 + 3/2 t + 1" (descending; "0" for the zero polynomial).
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

enum class PolyOp { add, sub, mul };
UniPoly poly_arith(const UniPoly& lhs, const UniPoly& rhs, PolyOp op);
UniPoly poly_scale(const UniPoly& p, const Rational& s);

/// C(l(t), d) = l(t)(l(t)-1)...(l(t)-d+1)/d! as a polynomial in t.
/// Throws std::invalid_argument when `linear` has degree > 1.
UniPoly binomial_poly(const UniPoly& linear, unsigned d);

/// Unique polynomial of degree < points.size() through the given points.
/// Throws std::invalid_argument on an empty input or duplicate abscissae.
UniPoly lagrange_interpolate(std::span<const std::pair<long, BigInt>> points);

/// Polynomial in x truncated after x^bound. Coefficients are integers.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t bound);
  TruncSeries(std::size_t bound, std::vector<BigInt> coeffs);

  /// 1 + x + ... + x^(terms-1), truncated at bound.
  static TruncSeries geometric(std::size_t bound, std::size_t terms);
  /// The monomial c * x^e (zero if e > bound).
  static TruncSeries monomial(std::size_t bound, std::size_t e, const BigInt& c);

  std::size_t bound() const { return bound_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt& operator[](std::size_t i) { return coeffs_[i]; }

  /// Throws std::invalid_argument on mismatched bounds.
  TruncSeries& operator*=(const TruncSeries& rhs);
  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  friend TruncSeries operator*(TruncSeries lhs, const TruncSeries& rhs) { return lhs *= rhs; }
  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// d/dx; the bound is kept and the top coefficient becomes zero.
  TruncSeries derivative() const;
  TruncSeries scaled(const BigInt& s) const;
  /// Divides every coefficient by s; throws std::domain_error if inexact.
  TruncSeries divided_exact(const BigInt& s) const;
  /// Multiplies by 1/(1-x) = 1 + x + x^2 + ... within the bound.
  TruncSeries divided_by_one_minus_x() const;
  /// Re-bounds the series, dropping or zero-padding the tail.
  TruncSeries truncated(std::size_t new_bound) const;

 private:
  void check_bound(const TruncSeries& rhs) const;
  std::size_t bound_;
  std::vector<BigInt> coeffs_;
};

enum class SeriesOp { mul, derivative, scale };
/// Dispatching form of the series operations. `rhs` is required for mul,
/// `factor` for scale.
TruncSeries series_ops(const TruncSeries& s, SeriesOp op,
                       const TruncSeries* rhs = nullptr,
                       const BigInt& factor = BigInt(1));

}  // namespace wmh
