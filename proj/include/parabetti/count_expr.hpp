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
#include <vector>

#include "parabetti/laurent_poly.hpp"
#include "parabetti/parabolic_data.hpp"
#include "parabetti/rational.hpp"

namespace parabetti {

/// Point-count expression in q over a curve of genus g:
///
///   q^q_power * (q - 1)^qminus1_power * prod_j Z_X(q^{-j})^{e_j}
///     * |J(F_q)|^jac_power * poly(q)
///
/// The Frobenius eigenvalues of the curve only occur through the zeta and
/// Jacobian atoms. Canonical form: poly has nonzero constant term and is not
/// divisible by (q - 1); those factors live in the exponents.
class CountExpr {
 public:
  CountExpr() : poly_(1) {}
  CountExpr(const LaurentPoly& poly_in_q);  // NOLINT: polynomial embedding

  static CountExpr q_pow(int a);
  static CountExpr q_minus_one(int e = 1);
  static CountExpr zeta(int j, int e = 1);
  static CountExpr jacobian(int e = 1);

  int q_power() const { return q_power_; }
  int qminus1_power() const { return qminus1_power_; }
  const std::map<int, int>& zeta_atoms() const { return zeta_; }
  int jac_power() const { return jac_power_; }
  const LaurentPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  // True when no zeta or Jacobian atom occurs.
  bool is_pure() const { return zeta_.empty() && jac_power_ == 0; }

  friend CountExpr operator*(const CountExpr& a, const CountExpr& b);
  CountExpr& operator*=(const CountExpr& o) { return *this = *this * o; }
  // Negative powers require a monomial poly.
  CountExpr pow(int e) const;
  friend bool operator==(const CountExpr&, const CountExpr&) = default;

  std::string to_string() const;

 private:
  void normalize();

  int q_power_ = 0;
  int qminus1_power_ = 0;
  std::map<int, int> zeta_;
  int jac_power_ = 0;
  LaurentPoly poly_;
};

// Value at q = q0 for expressions without curve atoms.
Rational evaluate(const CountExpr& e, const Rational& q0);

// Number of p-dimensional subspaces of F_q^r.
CountExpr grassmann_count(int r, int p);
// Number of flags F_1 = k^n > ... > F_m > 0 with dim F_j/F_{j+1} = r_j,
// built as a product of Grassmannian counts.
CountExpr flag_count(int n, const std::vector<int>& r);
// Points of the product of the flag varieties of R.
CountExpr f_R(const QuasiParabolicData& r);
// q^{(n^2-1)(g-1)} (q-1)^{-1} prod_{j=2}^n Z_X(q^{-j})
CountExpr tau(int n, int genus);

}  // namespace parabetti
