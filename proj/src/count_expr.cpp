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

#include "parabetti/count_expr.hpp"

#include <sstream>

#include "parabetti/errors.hpp"

namespace parabetti {

CountExpr::CountExpr(const LaurentPoly& poly_in_q) : poly_(poly_in_q) { normalize(); }

void CountExpr::normalize() {
  if (poly_.is_zero()) {
    *this = CountExpr();
    poly_ = LaurentPoly();
    return;
  }
  for (auto it = zeta_.begin(); it != zeta_.end();) {
    if (it->second == 0)
      it = zeta_.erase(it);
    else
      ++it;
  }
  int lo = poly_.low_degree();
  if (lo != 0) {
    q_power_ += lo;
    poly_ = poly_.shifted(-lo);
  }
  const LaurentPoly q_minus_1 = LaurentPoly::from_ints(0, {-1, 1});
  while (poly_.high_degree() > 0 && poly_.evaluate(1) == 0) {
    poly_ = divide_exact(poly_, q_minus_1);
    ++qminus1_power_;
  }
}

CountExpr CountExpr::q_pow(int a) {
  CountExpr e;
  e.q_power_ = a;
  return e;
}

CountExpr CountExpr::q_minus_one(int k) {
  CountExpr e;
  e.qminus1_power_ = k;
  return e;
}

CountExpr CountExpr::zeta(int j, int k) {
  if (j < 1) throw std::invalid_argument("zeta atom Z_X(q^-j) needs j >= 1");
  CountExpr e;
  if (k != 0) e.zeta_[j] = k;
  return e;
}

CountExpr CountExpr::jacobian(int k) {
  CountExpr e;
  e.jac_power_ = k;
  return e;
}

CountExpr operator*(const CountExpr& a, const CountExpr& b) {
  if (a.is_zero() || b.is_zero()) return CountExpr(LaurentPoly());
  CountExpr r;
  r.q_power_ = a.q_power_ + b.q_power_;
  r.qminus1_power_ = a.qminus1_power_ + b.qminus1_power_;
  r.zeta_ = a.zeta_;
  for (auto [j, e] : b.zeta_) r.zeta_[j] += e;
  r.jac_power_ = a.jac_power_ + b.jac_power_;
  r.poly_ = a.poly_ * b.poly_;
  r.normalize();
  return r;
}

CountExpr CountExpr::pow(int e) const {
  if (e < 0 && !poly_.is_monomial()) throw Unsupported("negative power of a count with non-monomial polynomial part");
  CountExpr r;
  r.q_power_ = q_power_ * e;
  r.qminus1_power_ = qminus1_power_ * e;
  for (auto [j, x] : zeta_) r.zeta_[j] = x * e;
  r.jac_power_ = jac_power_ * e;
  r.poly_ = poly_.pow(e);
  r.normalize();
  return r;
}

std::string CountExpr::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(" << poly_.to_string("q") << ")";
  if (q_power_ != 0) os << " * q^" << q_power_;
  if (qminus1_power_ != 0) os << " * (q - 1)^" << qminus1_power_;
  for (auto [j, e] : zeta_) os << " * Z(q^-" << j << ")^" << e;
  if (jac_power_ != 0) os << " * |J|^" << jac_power_;
  return os.str();
}

Rational evaluate(const CountExpr& e, const Rational& q0) {
  if (!e.is_pure()) throw Unsupported("count expression depends on the curve");
  if (e.is_zero()) return 0;
  if (q0 == 0 && e.q_power() < 0) throw PoleAtPoint("negative power of q at q = 0");
  if (q0 == 1 && e.qminus1_power() < 0) throw PoleAtPoint("negative power of (q - 1) at q = 1");
  Rational v = e.poly().evaluate(q0);
  v *= LaurentPoly::monomial(e.q_power()).evaluate(q0);
  Rational base = q0 - 1;
  for (int i = 0; i < std::abs(e.qminus1_power()); ++i) {
    if (e.qminus1_power() > 0)
      v *= base;
    else
      v /= base;
  }
  return v;
}

CountExpr grassmann_count(int r, int p) {
  if (p < 0 || p > r) throw std::invalid_argument("grassmann_count needs 0 <= p <= r");
  // prod_{i<p} (q^r - q^i) / (q^p - q^i); the q^i factors cancel.
  LaurentPoly num(1), den(1);
  for (int i = 0; i < p; ++i) {
    num *= LaurentPoly::monomial(r - i) - LaurentPoly(1);
    den *= LaurentPoly::monomial(p - i) - LaurentPoly(1);
  }
  return CountExpr(divide_exact(num, den));
}

CountExpr flag_count(int n, const std::vector<int>& r) {
  int total = 0;
  for (int x : r) {
    if (x < 0) throw std::invalid_argument("flag_count: negative step");
    total += x;
  }
  if (total != n) throw std::invalid_argument("flag_count: steps do not sum to n");
  // g(n, r_m) g(n - r_m, r_{m-1}) ... g(r_1 + r_2, r_2)
  CountExpr out;
  int ambient = n;
  for (size_t j = r.size(); j-- > 1;) {
    out *= grassmann_count(ambient, r[j]);
    ambient -= r[j];
  }
  return out;
}

CountExpr f_R(const QuasiParabolicData& r) {
  CountExpr out;
  for (const auto& pt : r.points()) out *= flag_count(r.rank(), pt.multiplicities);
  return out;
}

CountExpr tau(int n, int genus) {
  if (n < 1) throw std::invalid_argument("tau needs n >= 1");
  CountExpr out = CountExpr::q_pow((n * n - 1) * (genus - 1)) * CountExpr::q_minus_one(-1);
  for (int j = 2; j <= n; ++j) out *= CountExpr::zeta(j);
  return out;
}

}  // namespace parabetti
