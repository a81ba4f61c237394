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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabetti/laurent_poly.hpp"
#include "parabetti/rational.hpp"

namespace parabetti {

/// Laurent series in t known exactly for exponents order()..truncation().
///
/// Coefficients above the truncation are unknown and never reported. The
/// stored order is a lower bound for the support, not necessarily the index of
/// the first nonzero coefficient.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int order, int truncation, std::vector<Rational> coeffs);
  static LaurentSeries zero(int truncation);
  static LaurentSeries from_poly(const LaurentPoly& p, int truncation);

  int order() const { return order_; }
  int truncation() const { return truncation_; }
  // Exponents below order() are 0; above truncation() throws std::out_of_range.
  Rational coeff(int exponent) const;
  // First exponent with a nonzero coefficient within the known window.
  std::optional<int> valuation() const;
  bool is_zero_through_truncation() const { return !valuation().has_value(); }

  LaurentSeries truncated(int n) const;
  LaurentSeries shifted(int k) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries operator*(const Rational& c) const;

  // Coefficientwise equality over the common known window.
  bool agrees_with(const LaurentSeries& o) const;
  // First exponent in the common window where the coefficients differ.
  std::optional<int> first_difference(const LaurentSeries& o) const;

  // The known coefficients as a polynomial (the truncation is forgotten).
  LaurentPoly to_poly() const;
  std::string to_string() const;

 private:
  int order_ = 0;
  int truncation_ = -1;
  // Index i holds the coefficient of t^(order_ + i); size is
  // max(0, truncation_ - order_ + 1).
  std::vector<Rational> coeffs_;
};

}  // namespace parabetti
