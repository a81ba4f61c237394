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

#include <sstream>

#include "parabetti/betti.hpp"
#include "parabetti/errors.hpp"
#include "parabetti/numeric_functions.hpp"
#include "parabetti/parallel.hpp"
#include "parabetti/partition.hpp"
#include "parabetti/tilde.hpp"
#include "engine_internal.hpp"

namespace parabetti {

BettiResult assemble_result(const LaurentPoly& poly, long dim, Method method, bool ss_eq_stable) {
  BettiResult res;
  res.dim = dim;
  res.method = method;
  res.ss_eq_stable = ss_eq_stable;
  res.poly = poly;
  res.empty = poly.is_zero();
  if (res.empty) return res;
  const std::string who = method_name(method) + ": ";
  if (poly.low_degree() < 0 || poly.high_degree() > 2 * dim)
    throw NonPolynomialResult(who + "Poincare polynomial " + poly.to_string() + " has support outside 0.." +
                              std::to_string(2 * dim));
  for (long i = 0; i <= 2 * dim; ++i) {
    Rational c = poly.coeff(static_cast<int>(i));
    if (!is_integer(c)) throw NonPolynomialResult(who + "non-integral coefficient " + to_string(c));
    res.betti.push_back(to_long(c));
  }
  if (!ss_eq_stable) return res;
  for (long i = 0; i <= 2 * dim; ++i) {
    if (res.betti[i] < 0) throw CrossCheckFailure(who + "negative Betti number b_" + std::to_string(i));
    if (res.betti[i] != res.betti[2 * dim - i])
      throw CrossCheckFailure(who + "Poincare duality fails at b_" + std::to_string(i));
  }
  if (res.betti[0] != 1) throw CrossCheckFailure(who + "b_0 = " + std::to_string(res.betti[0]));
  return res;
}

namespace {

// (-1)^{r-1} / prod_{k<r} (1 - t^{2(n_k + n_{k+1})})
FactoredRatFunc pair_denominator(const Partition& part) {
  FactoredRatFunc::FactorMap f;
  for (int k = 0; k + 1 < part.length(); ++k) f[2 * (part.rank(k) + part.rank(k + 1))] -= 1;
  long sign = part.length() % 2 == 1 ? 1 : -1;
  return FactoredRatFunc(0, LaurentPoly(sign), std::move(f));
}

FactoredRatFunc sum_in_order(std::vector<FactoredRatFunc> terms) {
  // Pairwise summation keeps intermediate numerators small.
  if (terms.empty()) return {};
  while (terms.size() > 1) {
    std::vector<FactoredRatFunc> next;
    for (size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms[0];
}

LaurentPoly certify(const FactoredRatFunc& f, Method m) {
  try {
    return f.to_laurent_poly();
  } catch (const NonDivisible& e) {
    throw NonPolynomialResult(method_name(m) + ": result is not a polynomial (remainder " + e.remainder() + ")");
  }
}

}  // namespace

void detail::require_stable(const Instance& inst, const ComputeOptions& opts, bool ss) {
  if (ss || opts.force) return;
  auto w = find_slope_coincidence(inst);
  std::ostringstream os;
  os << "semistable and stable differ: a sub-data of rank " << w->sub.rank() << " and degree " << w->degree
     << " has the same parabolic slope";
  throw StrictSemistable(os.str());
}

FactoredRatFunc closed_formula_sum(const Instance& inst) {
  const auto& r = inst.data;
  const int g = inst.genus;
  const long n = r.rank(), d = inst.degree;
  const Rational lambda = parabolic_slope(inst);
  const auto parts = enumerate_partitions(r);
  auto terms = parallel_map(parts.size(), [&](size_t idx) {
    const Partition& part = parts[idx];
    long nr = part.rank(part.length() - 1);
    long e = sigma_prime(part) - (n - nr) * d + M_g(part, lambda, g);
    FactoredRatFunc term = pair_denominator(part).shifted(static_cast<int>(2 * e));
    for (int k = 0; k < part.length(); ++k) term *= P_R(part.block(k), g);
    return term;
  });
  FactoredRatFunc prefactor = FactoredRatFunc::one_minus_t_pow(2) * FactoredRatFunc::one_plus_t_pow(1, -2 * g);
  return prefactor * sum_in_order(std::move(terms));
}

BettiResult poincare_closed(const Instance& inst, const ComputeOptions& opts) {
  const bool ss = ss_equals_stable(inst);
  detail::require_stable(inst, opts, ss);
  LaurentPoly p = certify(closed_formula_sum(inst), Method::Closed);
  return assemble_result(p, moduli_dim(inst.data, inst.genus), Method::Closed, ss);
}

FactoredRatFunc Q_closed(const QuasiParabolicData& r, long degree, int genus) {
  const Rational lambda = (degree + r.alpha()) / r.rank();
  const auto parts = enumerate_partitions(r);
  auto terms = parallel_map(parts.size(), [&](size_t idx) {
    const Partition& part = parts[idx];
    long e = M_prime(part, degree) + M_floor(part, lambda);
    FactoredRatFunc term = pair_denominator(part).shifted(static_cast<int>(2 * e));
    for (int k = 0; k < part.length(); ++k) term *= Q_R(part.block(k), genus);
    return term;
  });
  return sum_in_order(std::move(terms));
}

FactoredRatFunc P_from_Q(const FactoredRatFunc& q, const QuasiParabolicData& r, int genus) {
  const int n = r.rank();
  const int shift = 2 * static_cast<int>(flag_dim(r)) + n * n * (genus - 1);
  return (q * FactoredRatFunc::one_minus_t_pow(2) * FactoredRatFunc::one_plus_t_pow(1, -2 * genus)).shifted(shift);
}

BettiResult q_closed(const Instance& inst, const ComputeOptions& opts) {
  const bool ss = ss_equals_stable(inst);
  detail::require_stable(inst, opts, ss);
  FactoredRatFunc p = P_from_Q(Q_closed(inst.data, inst.degree, inst.genus), inst.data, inst.genus);
  return assemble_result(certify(p, Method::QClosed), moduli_dim(inst.data, inst.genus), Method::QClosed, ss);
}

}  // namespace parabetti
