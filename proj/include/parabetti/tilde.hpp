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

#include "parabetti/count_expr.hpp"
#include "parabetti/factored_rat_func.hpp"
#include "parabetti/laurent_poly.hpp"
#include "parabetti/parabolic_data.hpp"

namespace parabetti {

// Substitutes q -> t^-2 and every Frobenius eigenvalue -> -t^-1:
//   Z_X(q^-j) -> (1 + t^{2j-1})^{2g} / ((1 - t^{2j}) (1 - t^{2j-2})),
//   |J(F_q)|  -> (1 + t^-1)^{2g}.
// Throws ZetaAtomPole for Z_X(q^-1).
FactoredRatFunc tilde(const CountExpr& e, int genus);

// t^{-2 dim F_R} prod_i (1 - t^{2i})^{|S|} / prod_P prod_{R^P_i != 0} prod_l (1 - t^{2l})
FactoredRatFunc tilde_f(const QuasiParabolicData& r);

// t^{-2n^2(g-1)} prod_{i<=n} (1 + t^{2i-1})^{2g} / ((1 - t^{2n}) prod_{i<n} (1 - t^{2i})^2),
// the substitution applied to |J(F_q)| * tau(n, g).
FactoredRatFunc tilde_tau(int n, int genus);

// Flag factor times zeta factor, without the t^{-2 dim} normalizations.
FactoredRatFunc P_R(const QuasiParabolicData& r, int genus);

// t^{n^2(g-1)} tilde_f(R) tilde_tau(n, g)
FactoredRatFunc Q_R(const QuasiParabolicData& r, int genus);

// Betti numbers of a smooth projective variety of dimension `dim` from its
// point count h: T^{2 dim} tilde(h)(T). Throws NotPolynomial unless the
// result is a polynomial supported in degrees 0..2 dim.
LaurentPoly poincare_from_count(const CountExpr& h, int dim, int genus);

}  // namespace parabetti
