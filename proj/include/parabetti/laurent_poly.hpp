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

#include <initializer_list>
#include <string>
#include <vector>

#include "parabetti/rational.hpp"

namespace parabetti {

/// Finitely supported Laurent polynomial in one variable t with rational
/// coefficients.
///
/// Storage is dense between the lowest and highest nonzero exponent; both end
/// coefficients are nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constant polynomial
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  // Coefficients of t^low, t^(low+1), ...
  LaurentPoly(int low, std::vector<Rational> coeffs);
  static LaurentPoly from_ints(int low, std::initializer_list<long> coeffs);
  static LaurentPoly monomial(int exponent, const Rational& c = 1);
  // (1 - t^k)^e for e >= 0.
  static LaurentPoly one_minus_t_pow(int k, int e = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  // Only meaningful when !is_zero().
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Negative exponents are only allowed for monomials (Unsupported otherwise).
  LaurentPoly pow(int e) const;
  // Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  // In-place multiplication by (1 - t^k)^e, e >= 0.
  void mul_one_minus_t_pow(int k, int e = 1);
  // t -> t^k for nonzero k (k may be negative).
  LaurentPoly substitute_power(int k) const;

  Rational evaluate(const Rational& x) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Exact quotient num / den; throws NonDivisible (carrying the remainder) when
/// den does not divide num in Q[t, 1/t].
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace parabetti
