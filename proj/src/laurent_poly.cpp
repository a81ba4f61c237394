/*
 * Copyright 2026 The parabetti Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "parabetti/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parabetti/errors.hpp"

namespace parabetti {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::from_ints(int low, std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return LaurentPoly(low, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::one_minus_t_pow(int k, int e) {
  LaurentPoly p(1);
  p.mul_one_minus_t_pow(k, e);
  return p;
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

Rational LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[exponent - low_];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_degree(), o.high_degree());
  std::vector<Rational> c(hi - lo + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[low_ - lo + i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[o.low_ - lo + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(c));
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw Unsupported("negative power of a non-monomial Laurent polynomial");
    Rational c = 1 / coeffs_[0];
    LaurentPoly base = monomial(-low_, c);
    return base.pow(-e);
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

void LaurentPoly::mul_one_minus_t_pow(int k, int e) {
  if (k <= 0) throw std::invalid_argument("mul_one_minus_t_pow requires k > 0");
  if (is_zero()) return;
  for (int rep = 0; rep < e; ++rep) {
    coeffs_.resize(coeffs_.size() + k);
    for (size_t i = coeffs_.size(); i-- > static_cast<size_t>(k);) coeffs_[i] -= coeffs_[i - k];
  }
  normalize();
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("substitute_power requires k != 0");
  if (is_zero()) return {};
  int hi = high_degree();
  int lo = std::min(low_ * k, hi * k);
  int top = std::max(low_ * k, hi * k);
  std::vector<Rational> c(top - lo + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[(low_ + static_cast<int>(i)) * k - lo] = coeffs_[i];
  return LaurentPoly(lo, std::move(c));
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw PoleAtPoint("Laurent polynomial with negative exponents evaluated at 0");
  Rational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  // acc is the polynomial part; multiply by x^low.
  Rational xl = 1;
  if (low_ >= 0) {
    for (int i = 0; i < low_; ++i) xl *= x;
  } else {
    for (int i = 0; i < -low_; ++i) xl /= x;
  }
  return acc * xl;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || e == 0) os << parabetti::to_string(mag);
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (num.is_zero()) return {};
  const int shift = num.low_degree() - den.low_degree();
  // Work with ordinary polynomials having nonzero constant terms.
  std::vector<Rational> rem = num.coefficients();
  const std::vector<Rational>& d = den.coefficients();
  const size_t dn = d.size();
  if (rem.size() < dn) {
    throw NonDivisible("inexact polynomial division", num.to_string());
  }
  std::vector<Rational> quot(rem.size() - dn + 1);
  const Rational& lead = d.back();
  for (size_t i = quot.size(); i-- > 0;) {
    Rational q = rem[i + dn - 1] / lead;
    if (q == 0) continue;
    quot[i] = q;
    for (size_t j = 0; j < dn; ++j) rem[i + j] -= q * d[j];
  }
  LaurentPoly remainder(num.low_degree(), std::move(rem));
  if (!remainder.is_zero()) throw NonDivisible("inexact polynomial division", remainder.to_string());
  return LaurentPoly(shift, std::move(quot));
}

}  // namespace parabetti
