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

#include "parabetti/rank2.hpp"

#include <algorithm>

#include "parabetti/errors.hpp"

namespace parabetti {

Rank2Profile rank2_profile(const Instance& inst) {
  if (inst.data.rank() != 2)
    throw MethodInapplicable("rank2 method needs rank 2, got rank " + std::to_string(inst.data.rank()));
  QuasiParabolicData r = normalize_seshadri(inst.data);
  Rank2Profile prof;
  prof.degree = inst.degree;
  prof.genus = inst.genus;
  for (const auto& pt : r.points()) {
    if (pt.multiplicities.size() == 1) continue;
    prof.deltas.push_back(pt.weights[0] - pt.weights[1]);
  }
  return prof;
}

Rational rank2_psi(const Rank2Profile& prof, const std::vector<bool>& in_subset) {
  Rational psi = 0;
  for (size_t p = 0; p < prof.deltas.size(); ++p) psi += in_subset[p] ? prof.deltas[p] : Rational(-prof.deltas[p]);
  return psi;
}

namespace {

// Calls f(|T_I|, [psi_I] + a_I) for every sign pattern.
template <typename F>
void for_each_sign_pattern(const Rank2Profile& prof, F f) {
  const size_t m = prof.deltas.size();
  if (m > 20) throw Unsupported("rank2: too many nontrivial points");
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<bool> in(m);
    long size = 0;
    for (size_t p = 0; p < m; ++p)
      if ((in[p] = (mask >> p) & 1)) ++size;
    Rational psi = rank2_psi(prof, in);
    if (is_integer(psi)) throw IntegralPsi("rank2: psi = " + to_string(psi) + " is an integer");
    long fl = floor_long(psi);
    long a = ((prof.degree + fl) % 2 == 0) ? 1 : 0;
    f(size, fl + a);
  }
}

}  // namespace

bool rank2_admissible(const Rank2Profile& prof) {
  try {
    for_each_sign_pattern(prof, [](long, long) {});
  } catch (const IntegralPsi&) {
    return false;
  }
  return true;
}

BettiResult poincare_rank2(const Rank2Profile& prof) {
  const int g = prof.genus;
  const long m = static_cast<long>(prof.deltas.size());
  const long dim = m + 3L * (g - 1);
  LaurentPoly one_plus_t = LaurentPoly::from_ints(0, {1, 1});
  LaurentPoly num = LaurentPoly::from_ints(0, {1, 0, 1}).pow(static_cast<int>(m)) *
                    LaurentPoly::from_ints(0, {1, 0, 0, 1}).pow(2 * g);
  LaurentPoly sum;
  for_each_sign_pattern(prof, [&](long size, long shift) {
    sum = sum + LaurentPoly::monomial(static_cast<int>(2 * (g + size + shift)));
  });
  num = num - sum * one_plus_t.pow(2 * g);
  LaurentPoly den = LaurentPoly::one_minus_t_pow(4) * LaurentPoly::one_minus_t_pow(2);
  LaurentPoly poly;
  try {
    poly = divide_exact(num, den);
  } catch (const NonDivisible& e) {
    throw NonPolynomialResult(std::string("rank2: ") + e.what());
  }
  return assemble_result(poly, dim, Method::Rank2, true);
}

bool exists_stable_rank2(const Rank2Profile& prof) {
  bool ok = true;
  for_each_sign_pattern(prof, [&](long size, long shift) {
    if (size + shift <= 0) ok = false;
  });
  // The criterion is derived from the genus-0 formula; in positive genus
  // the leading term (1+t^3)^{2g} already forces b_0 = 1.
  return prof.genus > 0 ? true : ok;
}

std::string family_tag(Rank2Family f) {
  switch (f) {
    case Rank2Family::A: return "A";
    case Rank2Family::B: return "B";
    case Rank2Family::CI: return "C-i";
    case Rank2Family::CII: return "C-ii";
    case Rank2Family::DI: return "D-i";
    case Rank2Family::DII: return "D-ii";
  }
  return "?";
}

Rank2Family parse_family_tag(const std::string& tag) {
  for (auto f : {Rank2Family::A, Rank2Family::B, Rank2Family::CI, Rank2Family::CII, Rank2Family::DI,
                 Rank2Family::DII})
    if (family_tag(f) == tag) return f;
  throw InvalidData("unknown rank-2 family tag '" + tag + "'");
}

FactoredRatFunc family_formula(Rank2Family f, int g) {
  using F = FactoredRatFunc;
  const F one_t2 = F::one_plus_t_pow(2, 1);
  const F cube = F::one_plus_t_pow(3, 2 * g);
  const F lin = F::monomial(2 * g) * F::one_plus_t_pow(1, 2 * g);
  const F den = F::one_minus_t_pow(2, -2);
  const F base = (cube - lin) * den;
  switch (f) {
    case Rank2Family::A: return base;
    case Rank2Family::B: return one_t2 * base;
    case Rank2Family::CI: return one_t2.pow(2) * base;
    case Rank2Family::DI: return one_t2.pow(3) * base;
    case Rank2Family::CII: return (one_t2.pow(2) * cube - F::monomial(2, 4) * lin) * den;
    case Rank2Family::DII: return (one_t2.pow(3) * cube - F::monomial(2, 4) * one_t2 * lin) * den;
  }
  throw InvalidData("unknown rank-2 family");
}

std::optional<Rank2Family> rank2_family(const Rank2Profile& prof) {
  std::vector<Rational> d = prof.deltas;
  std::sort(d.begin(), d.end());
  auto check = [](const Rational& x, const Rational& bound) {
    if (x == bound) throw InvalidData("rank2: delta vector lies on a region boundary");
  };
  switch (d.size()) {
    case 1: return Rank2Family::A;
    case 2: return Rank2Family::B;
    case 3: {
      Rational u = d[0] + d[1] + d[2], v = -d[0] + d[1] + d[2];
      check(u, -2);
      check(v, 0);
      return (u < -2 || v > 0) ? Rank2Family::CI : Rank2Family::CII;
    }
    case 4: {
      Rational u = d[0] + d[1] + d[2] - d[3], v = -d[0] + d[1] + d[2] + d[3];
      check(u, -2);
      check(v, 0);
      return (u < -2 || v > 0) ? Rank2Family::DI : Rank2Family::DII;
    }
    default: return std::nullopt;
  }
}

}  // namespace parabetti
