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

#include "wmh/exactmath.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wmh {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs)
    : UniPoly(std::vector<Rational>(coeffs)) {}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::linear(const Rational& slope, const Rational& intercept) {
  return UniPoly({intercept, slope});
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (idx == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << " ";
    os << "t";
    if (idx > 1) os << "^" << idx;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << p.to_string();
}

UniPoly poly_arith(const UniPoly& lhs, const UniPoly& rhs, PolyOp op) {
  switch (op) {
    case PolyOp::add: return lhs + rhs;
    case PolyOp::sub: return lhs - rhs;
    case PolyOp::mul: return lhs * rhs;
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

UniPoly poly_scale(const UniPoly& p, const Rational& s) { return p * s; }

UniPoly binomial_poly(const UniPoly& linear, unsigned d) {
  if (linear.degree() > 1) {
    throw std::invalid_argument("binomial_poly: argument must have degree <= 1");
  }
  UniPoly acc = UniPoly::constant(1);
  for (unsigned j = 0; j < d; ++j) {
    acc *= linear - UniPoly::constant(j);
  }
  return acc * make_rational(1, factorial(d));
}

UniPoly lagrange_interpolate(std::span<const std::pair<long, BigInt>> points) {
  if (points.empty()) {
    throw std::invalid_argument("lagrange_interpolate: no points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("lagrange_interpolate: duplicate abscissa " +
                                    std::to_string(points[i].first));
      }
    }
  }
  UniPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis = UniPoly::constant(1);
    BigInt denom = 1;
    const long xi = points[i].first;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      const long xj = points[j].first;
      basis *= UniPoly::linear(1, -xj);
      denom *= BigInt(xi) - xj;
    }
    result += basis * make_rational(points[i].second, denom);
  }
  return result;
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(std::size_t bound) : bound_(bound), coeffs_(bound + 1) {}

TruncSeries::TruncSeries(std::size_t bound, std::vector<BigInt> coeffs)
    : bound_(bound), coeffs_(std::move(coeffs)) {
  coeffs_.resize(bound_ + 1);
}

TruncSeries TruncSeries::geometric(std::size_t bound, std::size_t terms) {
  TruncSeries s(bound);
  for (std::size_t j = 0; j < terms && j <= bound; ++j) s.coeffs_[j] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(std::size_t bound, std::size_t e, const BigInt& c) {
  TruncSeries s(bound);
  if (e <= bound) s.coeffs_[e] = c;
  return s;
}

void TruncSeries::check_bound(const TruncSeries& rhs) const {
  if (rhs.bound_ != bound_) {
    throw std::invalid_argument("TruncSeries: mismatched bounds " +
                                std::to_string(bound_) + " and " +
                                std::to_string(rhs.bound_));
  }
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& rhs) {
  check_bound(rhs);
  std::vector<BigInt> out(bound_ + 1);
  for (std::size_t i = 0; i <= bound_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= bound_; ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  check_bound(rhs);
  for (std::size_t i = 0; i <= bound_; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  check_bound(rhs);
  for (std::size_t i = 0; i <= bound_; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncSeries TruncSeries::derivative() const {
  TruncSeries d(bound_);
  for (std::size_t i = 1; i <= bound_; ++i) d.coeffs_[i - 1] = coeffs_[i] * i;
  return d;
}

TruncSeries TruncSeries::scaled(const BigInt& s) const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncSeries TruncSeries::divided_exact(const BigInt& s) const {
  if (s == 0) throw std::domain_error("TruncSeries: division by zero");
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t())) {
      throw std::domain_error("TruncSeries: inexact division by " + s.get_str());
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return r;
}

TruncSeries TruncSeries::divided_by_one_minus_x() const {
  TruncSeries r = *this;
  for (std::size_t i = 1; i <= bound_; ++i) r.coeffs_[i] += r.coeffs_[i - 1];
  return r;
}

TruncSeries TruncSeries::truncated(std::size_t new_bound) const {
  return TruncSeries(new_bound,
                     std::vector<BigInt>(coeffs_.begin(),
                                         coeffs_.begin() + std::min(new_bound, bound_) + 1));
}

TruncSeries series_ops(const TruncSeries& s, SeriesOp op, const TruncSeries* rhs,
                       const BigInt& factor) {
  switch (op) {
    case SeriesOp::mul:
      if (rhs == nullptr) throw std::invalid_argument("series_ops: mul needs rhs");
      return s * *rhs;
    case SeriesOp::derivative:
      return s.derivative();
    case SeriesOp::scale:
      return s.scaled(factor);
  }
  throw std::invalid_argument("series_ops: unknown op");
}

}  // namespace wmh
