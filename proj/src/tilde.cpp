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

#include "parabetti/tilde.hpp"

#include "parabetti/errors.hpp"
#include "parabetti/numeric_functions.hpp"

namespace parabetti {

FactoredRatFunc tilde(const CountExpr& e, int genus) {
  if (e.is_zero()) return {};
  FactoredRatFunc out(e.poly().substitute_power(-2));
  out = out.shifted(-2 * e.q_power());
  // (q - 1)^b -> t^{-2b} (1 - t^2)^b
  const int b = e.qminus1_power();
  out *= FactoredRatFunc::one_minus_t_pow(2, b).shifted(-2 * b);
  for (auto [j, x] : e.zeta_atoms()) {
    if (j == 1) throw ZetaAtomPole("Z_X(q^-1) has a pole under the substitution");
    out *= FactoredRatFunc::one_plus_t_pow(2 * j - 1, 2 * genus * x);
    out *= FactoredRatFunc::one_minus_t_pow(2 * j, -x);
    out *= FactoredRatFunc::one_minus_t_pow(2 * j - 2, -x);
  }
  const int jac = e.jac_power();
  out *= FactoredRatFunc::one_plus_t_pow(1, 2 * genus * jac).shifted(-2 * genus * jac);
  return out;
}

namespace {

FactoredRatFunc flag_factor(const QuasiParabolicData& r) {
  FactoredRatFunc::FactorMap f;
  const int np = static_cast<int>(r.num_points());
  for (int i = 1; i <= r.rank(); ++i) f[2 * i] += np;
  for (const auto& pt : r.points())
    for (int m : pt.multiplicities)
      for (int l = 1; l <= m; ++l) f[2 * l] -= 1;
  return FactoredRatFunc(0, LaurentPoly(1), std::move(f));
}

FactoredRatFunc zeta_factor(int n, int genus) {
  FactoredRatFunc out(1);
  for (int i = 1; i <= n; ++i) out *= FactoredRatFunc::one_plus_t_pow(2 * i - 1, 2 * genus);
  FactoredRatFunc::FactorMap f{{2 * n, -1}};
  for (int i = 1; i < n; ++i) f[2 * i] -= 2;
  return out * FactoredRatFunc(0, LaurentPoly(1), std::move(f));
}

}  // namespace

FactoredRatFunc tilde_f(const QuasiParabolicData& r) {
  return flag_factor(r).shifted(-2 * static_cast<int>(flag_dim(r)));
}

FactoredRatFunc tilde_tau(int n, int genus) {
  if (n < 1) throw std::invalid_argument("tilde_tau needs n >= 1");
  return zeta_factor(n, genus).shifted(-2 * n * n * (genus - 1));
}

FactoredRatFunc P_R(const QuasiParabolicData& r, int genus) { return flag_factor(r) * zeta_factor(r.rank(), genus); }

FactoredRatFunc Q_R(const QuasiParabolicData& r, int genus) {
  const int n = r.rank();
  return (tilde_f(r) * tilde_tau(n, genus)).shifted(n * n * (genus - 1));
}

LaurentPoly poincare_from_count(const CountExpr& h, int dim, int genus) {
  FactoredRatFunc f = tilde(h, genus).shifted(2 * dim);
  LaurentPoly p;
  try {
    p = f.to_laurent_poly();
  } catch (const NonDivisible& e) {
    throw NotPolynomial("substituted count is not a polynomial (remainder " + e.remainder() + ")");
  }
  if (!p.is_zero() && (p.low_degree() < 0 || p.high_degree() > 2 * dim))
    throw NotPolynomial("substituted count has support outside degrees 0.." + std::to_string(2 * dim));
  return p;
}

}  // namespace parabetti
