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

#include "parabetti/laurent_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace parabetti {

LaurentSeries::LaurentSeries(int order, int truncation, std::vector<Rational> coeffs)
    : order_(order), truncation_(truncation), coeffs_(std::move(coeffs)) {
  coeffs_.resize(static_cast<size_t>(std::max(0, truncation_ - order_ + 1)));
}

LaurentSeries LaurentSeries::zero(int truncation) { return LaurentSeries(truncation + 1, truncation, {}); }

LaurentSeries LaurentSeries::from_poly(const LaurentPoly& p, int truncation) {
  if (p.is_zero()) return zero(truncation);
  int lo = p.low_degree();
  std::vector<Rational> c;
  for (int e = lo; e <= truncation; ++e) c.push_back(p.coeff(e));
  return LaurentSeries(lo, truncation, std::move(c));
}

Rational LaurentSeries::coeff(int exponent) const {
  if (exponent > truncation_)
    throw std::out_of_range("coefficient t^" + std::to_string(exponent) + " beyond truncation " +
                            std::to_string(truncation_));
  if (exponent < order_) return 0;
  return coeffs_[exponent - order_];
}

std::optional<int> LaurentSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return order_ + static_cast<int>(i);
  return std::nullopt;
}

LaurentSeries LaurentSeries::truncated(int n) const {
  if (n >= truncation_) return *this;
  std::vector<Rational> c;
  for (int e = order_; e <= n; ++e) c.push_back(coeffs_[e - order_]);
  return LaurentSeries(std::min(order_, n + 1), n, std::move(c));
}

LaurentSeries LaurentSeries::shifted(int k) const { return LaurentSeries(order_ + k, truncation_ + k, coeffs_); }

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  int trunc = std::min(a.truncation_, b.truncation_);
  int lo = std::min(a.order_, b.order_);
  std::vector<Rational> c(static_cast<size_t>(std::max(0, trunc - lo + 1)));
  for (int e = lo; e <= trunc; ++e) {
    Rational& slot = c[e - lo];
    if (e >= a.order_) slot += a.coeffs_[e - a.order_];
    if (e >= b.order_) slot += b.coeffs_[e - b.order_];
  }
  return LaurentSeries(lo, trunc, std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + b * Rational(-1); }

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // a = t^oa (known through ta), b = t^ob (known through tb): the product is
  // known through min(ta + ob, tb + oa).
  int lo = a.order_ + b.order_;
  int trunc = std::min(a.truncation_ + b.order_, b.truncation_ + a.order_);
  std::vector<Rational> c(static_cast<size_t>(std::max(0, trunc - lo + 1)));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    int ei = a.order_ + static_cast<int>(i);
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      int e = ei + b.order_ + static_cast<int>(j);
      if (e > trunc) break;
      c[e - lo] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries(lo, trunc, std::move(c));
}

std::optional<int> LaurentSeries::first_difference(const LaurentSeries& o) const {
  int trunc = std::min(truncation_, o.truncation_);
  int lo = std::min(order_, o.order_);
  for (int e = lo; e <= trunc; ++e)
    if (coeff(e) != o.coeff(e)) return e;
  return std::nullopt;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const { return !first_difference(o).has_value(); }

LaurentPoly LaurentSeries::to_poly() const { return LaurentPoly(order_, coeffs_); }

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  os << to_poly().to_string() << " + O(t^" << truncation_ + 1 << ")";
  return os.str();
}

}  // namespace parabetti
