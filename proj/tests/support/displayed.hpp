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

// Known closed forms for rank 2, 3 and 4, written out term by term
// as numerator / denominator pairs. They are built only from polynomial
// arithmetic so they stay independent of the engine.

#pragma once

#include <string>

#include "parabetti/laurent_poly.hpp"

namespace displayed {

using parabetti::LaurentPoly;

struct Fraction {
  LaurentPoly num;
  LaurentPoly den;
};

// 1 + t^k
inline LaurentPoly op(int k) { return LaurentPoly::monomial(0) + LaurentPoly::monomial(k); }
inline LaurentPoly t(int k, long c = 1) { return LaurentPoly::monomial(k, c); }
inline LaurentPoly om(int k) { return LaurentPoly::one_minus_t_pow(k); }
inline LaurentPoly p124() { return LaurentPoly::from_ints(0, {1, 0, 1, 0, 1}); }

// Rank 2: one point, two points, three points (two regions), four points
// (two regions). `tag` is one of A, B, C-i, C-ii, D-i, D-ii.
inline Fraction rank2(const char* tag, int g) {
  const std::string s = tag;
  const LaurentPoly den = om(2).pow(2);
  const LaurentPoly base = op(3).pow(2 * g) - t(2 * g) * op(1).pow(2 * g);
  if (s == "A") return {base, den};
  if (s == "B") return {op(2) * base, den};
  if (s == "C-i") return {op(2).pow(2) * base, den};
  if (s == "D-i") return {op(2).pow(3) * base, den};
  if (s == "C-ii") return {op(2).pow(2) * op(3).pow(2 * g) - t(2 * g + 2, 4) * op(1).pow(2 * g), den};
  return {op(2).pow(3) * op(3).pow(2 * g) - t(2 * g + 2, 4) * op(2) * op(1).pow(2 * g), den};
}

// Rank 3, one point, any weights and degree.
inline Fraction rank3_one_point(int g) {
  LaurentPoly num = t(6 * g - 2) * p124() * op(1).pow(4 * g) -
                    t(4 * g - 2) * op(2).pow(2) * op(1).pow(2 * g) * op(3).pow(2 * g) +
                    op(3).pow(2 * g) * op(5).pow(2 * g);
  LaurentPoly den = (t(2) - t(0)).pow(4) * op(2);
  return {num, den};
}

// Rank 3, two points with weights (0,1/12,3/12) and (1/12,5/12,6/12), d = 0, 2 mod 3.
inline Fraction rank3_two_points_even(int g) {
  LaurentPoly num = t(4 * g, -3) * op(1).pow(2 * g) * op(2).pow(2) * op(3).pow(2 * g) +
                    t(6 * g) * op(1).pow(4 * g) * LaurentPoly::from_ints(0, {2, 0, 5, 0, 2}) +
                    op(3).pow(2 * g) * op(5).pow(2 * g) * p124();
  return {num, om(2).pow(4)};
}

// Same data, d = 1 mod 3.
inline Fraction rank3_two_points_odd(int g) {
  LaurentPoly num = p124() * (t(6 * g - 2) * p124() * op(1).pow(4 * g) -
                              t(4 * g - 2) * op(2).pow(2) * op(1).pow(2 * g) * op(3).pow(2 * g) +
                              op(3).pow(2 * g) * op(5).pow(2 * g));
  return {num, om(2).pow(4)};
}

// Rank 4, one point, weights (0,1/8,1/4,1/2), d = 0, 1, 2 mod 4.
inline Fraction rank4_low(int g) {
  LaurentPoly num = op(3).pow(2 * g) * op(5).pow(2 * g) * op(7).pow(2 * g) -
                    t(6 * g - 2, 2) * op(1).pow(2 * g) * op(3).pow(2 * g) * op(5).pow(2 * g) * p124() -
                    t(8 * g - 4) * op(1).pow(2 * g) * op(3).pow(4 * g) * p124().pow(2) +
                    t(10 * g - 4) * op(2) * op(1).pow(4 * g) * op(3).pow(2 * g) *
                        LaurentPoly::from_ints(0, {3, 0, 5, 0, 5, 0, 3}) -
                    t(12 * g - 4, 2) * op(1).pow(6 * g) * p124().pow(2);
  return {num, om(2).pow(6) * op(2) * p124()};
}

// Rank 4, one point, weights (0,1/8,1/4,1/2), d = 3 mod 4. The commonly quoted
// form carries a factor 2 on the last term; that numerator is not divisible
// by the denominator, and a factor 1 reproduces the computed polynomial for
// every genus, so last_coeff = 2 gives the quoted form.
inline Fraction rank4_three(int g, long last_coeff = 1) {
  LaurentPoly num = op(3).pow(2 * g) * op(5).pow(2 * g) * op(7).pow(2 * g) -
                    t(6 * g - 4) * op(1).pow(2 * g) * op(3).pow(2 * g) * op(5).pow(2 * g) * p124() * op(4) -
                    t(8 * g - 4) * op(1).pow(2 * g) * op(3).pow(4 * g) * p124().pow(2) +
                    t(10 * g - 6) * op(2).pow(4) * op(1).pow(4 * g) * op(3).pow(2 * g) * op(4) -
                    t(12 * g - 6, last_coeff) * op(1).pow(6 * g) * op(4) * p124().pow(2);
  return {num, om(2).pow(6) * op(2) * p124()};
}

}  // namespace displayed
