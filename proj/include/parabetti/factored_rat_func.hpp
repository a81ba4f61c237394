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

#include <map>
#include <string>

#include "parabetti/laurent_poly.hpp"
#include "parabetti/laurent_series.hpp"
#include "parabetti/rational.hpp"

namespace parabetti {

/// Rational function t^shift * numer(t) * prod_k (1 - t^k)^{e_k}.
///
/// Canonical form: numer has lowest exponent 0 (any monomial factor lives in
/// shift), exponents e_k are nonzero, and the zero function has an empty
/// numerator, zero shift and no factors. Two values may represent the same
/// function with different factorizations; operator== decides equality by
/// cross-multiplication.
class FactoredRatFunc {
 public:
  using FactorMap = std::map<int, int>;

  FactoredRatFunc() = default;
  FactoredRatFunc(const LaurentPoly& p);  // NOLINT: polynomial embedding
  FactoredRatFunc(long c) : FactoredRatFunc(LaurentPoly(c)) {}  // NOLINT
  FactoredRatFunc(int shift, LaurentPoly numer, FactorMap factors);

  static FactoredRatFunc monomial(int exponent, const Rational& c = 1);
  // (1 - t^k)^e, e of either sign.
  static FactoredRatFunc one_minus_t_pow(int k, int e = 1);
  // (t^k - 1) = -(1 - t^k).
  static FactoredRatFunc t_pow_minus_one(int k);
  // (1 + t^k)^e with k > 0 and e of either sign; negative powers are written
  // as ((1 - t^k) / (1 - t^{2k}))^{-e} so the denominator stays in the
  // (1 - t^j) family.
  static FactoredRatFunc one_plus_t_pow(int k, int e);

  bool is_zero() const { return numer_.is_zero(); }
  int shift() const { return shift_; }
  const LaurentPoly& numer() const { return numer_; }
  const FactorMap& factors() const { return factors_; }
  // The t-adic valuation: every factor has constant term 1.
  int order() const { return shift_; }

  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b);
  friend FactoredRatFunc operator-(const FactoredRatFunc& a, const FactoredRatFunc& b);
  FactoredRatFunc operator-() const;
  FactoredRatFunc& operator*=(const FactoredRatFunc& o) { return *this = *this * o; }
  FactoredRatFunc& operator+=(const FactoredRatFunc& o) { return *this = *this + o; }
  FactoredRatFunc pow(int e) const;
  FactoredRatFunc shifted(int k) const;

  friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b);

  // Multiplies out the factors with positive exponent and divides by the
  // others; throws NonDivisible when the function is not a Laurent polynomial.
  LaurentPoly to_laurent_poly() const;

  std::string to_string() const;

 private:
  void normalize();

  int shift_ = 0;
  LaurentPoly numer_;
  FactorMap factors_;
};

// Expansion as a Laurent series through t^n, using
// 1/(1 - t^k) = sum_{m >= 0} t^{km}. Rejects n above kMaxTruncation.
inline constexpr int kMaxTruncation = 1 << 16;
LaurentSeries expand_series(const FactoredRatFunc& f, int n);

// Exact value at x0; throws PoleAtPoint if a denominator factor vanishes.
Rational evaluate(const FactoredRatFunc& f, const Rational& x0);

}  // namespace parabetti
