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

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "parabetti/betti.hpp"
#include "parabetti/errors.hpp"
#include "parabetti/numeric_functions.hpp"
#include "parabetti/partition.hpp"
#include "parabetti/rank2.hpp"
#include "support/displayed.hpp"
#include "support/tables.hpp"

using namespace parabetti;

namespace {

Rank2Profile profile(std::vector<std::string> deltas, int g, long d = 0) {
  Rank2Profile p;
  for (auto& s : deltas) p.deltas.push_back(parse_rational(s));
  p.genus = g;
  p.degree = d;
  return p;
}

// Instance with full flags whose weight gaps are the given deltas.
Instance from_deltas(const std::vector<Rational>& deltas, int g, long d) {
  std::vector<ParabolicPoint> pts;
  for (const auto& x : deltas) pts.push_back({{1, 1}, {Rational(0), Rational(-x)}});
  return {g, d, QuasiParabolicData(pts)};
}

std::vector<Rational> random_deltas(std::mt19937& rng, int m) {
  std::uniform_int_distribution<long> den(2, 13);
  std::vector<Rational> out;
  for (int i = 0; i < m; ++i) {
    long q = den(rng);
    std::uniform_int_distribution<long> num(1, q - 1);
    out.push_back(-make_rational(num(rng), q));
  }
  return out;
}

LaurentPoly expand(const FactoredRatFunc& f) { return f.to_laurent_poly(); }

}  // namespace

TEST_CASE("one nontrivial point in genus two") {
  for (const char* d : {"-1/3", "-5/7", "-1/100"})
    for (long deg : {0, 1, 2, 7}) {
      BettiResult r = poincare_rank2(profile({d}, 2, deg));
      CHECK(r.betti == std::vector<long>{1, 0, 2, 4, 2, 4, 2, 0, 1});
      CHECK(r.method == Method::Rank2);
    }
}

TEST_CASE("three points in the small-sum region of genus zero give a point") {
  BettiResult r = poincare_rank2(profile({"-1/2", "-1/3", "-1/4"}, 0));
  CHECK(r.dim == 0);
  CHECK(r.poly == LaurentPoly(1));
}

TEST_CASE("four points of genus one") {
  BettiResult r = poincare_rank2(profile({"-5/7", "-3/5", "-1/2", "-2/5"}, 1));
  REQUIRE(r.dim == 4);
  CHECK(std::vector<long>(r.betti.begin(), r.betti.begin() + 5) == std::vector<long>{1, 0, 5, 2, 8});
}

TEST_CASE("integral psi is rejected") {
  CHECK_THROWS_AS(poincare_rank2(profile({"-1/2", "-1/2"}, 1)), IntegralPsi);
  CHECK_THROWS_AS(exists_stable_rank2(profile({"-1/3", "-2/3"}, 0)), IntegralPsi);
  CHECK_FALSE(rank2_admissible(profile({"-1/2", "-1/2"}, 1)));
  CHECK(rank2_admissible(profile({"-1/2", "-1/3"}, 1)));
}

TEST_CASE("existence") {
  CHECK_FALSE(exists_stable_rank2(profile({"-1/3"}, 0)));
  CHECK(exists_stable_rank2(profile({"-1/2", "-1/3", "-1/4"}, 0)));
  for (int g = 1; g <= 3; ++g) CHECK(exists_stable_rank2(profile({"-1/3"}, g)));
}

TEST_CASE("existence matches a nonzero Poincare polynomial") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Rank2Profile p;
    p.deltas = random_deltas(rng, 1 + trial % 5);
    p.genus = trial % 4;
    p.degree = trial % 3;
    if (!rank2_admissible(p)) continue;
    CHECK(exists_stable_rank2(p) == !poincare_rank2(p).empty);
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("profile extraction") {
  Instance inst{1, 3,
                QuasiParabolicData({{{1, 1}, {Rational(0), make_rational(1, 3)}},
                                    {{2}, {make_rational(1, 5)}},
                                    {{1, 0, 1}, {Rational(0), make_rational(1, 4), make_rational(1, 2)}}})};
  Rank2Profile p = rank2_profile(inst);
  CHECK(p.deltas == std::vector<Rational>{make_rational(-1, 3), make_rational(-1, 2)});
  CHECK(p.degree == 3);
  CHECK(p.genus == 1);
  Instance rank3{1, 0, QuasiParabolicData({{{1, 1, 1}, {Rational(0), make_rational(1, 4), make_rational(1, 2)}}})};
  CHECK_THROWS_AS(rank2_profile(rank3), MethodInapplicable);
}

TEST_CASE("sign patterns are the length-two partitions") {
  std::mt19937 rng(11);
  for (int m = 1; m <= 4; ++m) {
    Instance inst = from_deltas(random_deltas(rng, m), 1, 0);
    std::multiset<long> sizes_from_partitions, sizes_from_patterns;
    int count = 0;
    for (const auto& part : enumerate_partitions(inst.data)) {
      if (part.length() != 2) continue;
      ++count;
      long t_size = 0;
      for (int p = 0; p < m; ++p) t_size += part.entry(p, 0, 0) == 0;
      CHECK(sigma_prime(part) == t_size);
      sizes_from_partitions.insert(t_size);
    }
    for (unsigned mask = 0; mask < (1u << m); ++mask) sizes_from_patterns.insert(__builtin_popcount(mask));
    CHECK(count == (1 << m));
    CHECK(sizes_from_partitions == sizes_from_patterns);
  }
}

TEST_CASE("oracle equals the general closed formula") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Instance inst = from_deltas(random_deltas(rng, 1 + trial % 4), trial % 4, trial % 5);
    Rank2Profile p = rank2_profile(inst);
    if (!rank2_admissible(p)) continue;
    REQUIRE(ss_equals_stable(inst));
    CHECK(poincare_rank2(p).poly == poincare_closed(inst).poly);
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("the answer depends on the degree only through its parity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Rank2Profile p;
    p.deltas = random_deltas(rng, 1 + trial % 4);
    p.genus = trial % 3;
    if (!rank2_admissible(p)) continue;
    p.degree = 0;
    LaurentPoly even = poincare_rank2(p).poly;
    p.degree = 1;
    LaurentPoly odd = poincare_rank2(p).poly;
    for (long d = 2; d <= 5; ++d) {
      p.degree = d;
      CHECK(poincare_rank2(p).poly == (d % 2 ? odd : even));
    }
    // One or two points: no parity dependence at all.
    if (p.deltas.size() <= 2) CHECK(even == odd);
    // Elementary transformation at the first point.
    Rank2Profile q = p;
    q.deltas[0] = -1 - q.deltas[0];
    q.degree = 0;
    CHECK(poincare_rank2(q).poly == odd);
  }
}

TEST_CASE("family formulas") {
  using displayed::rank2;
  SUBCASE("one point in genus two") {
    LaurentPoly num = LaurentPoly::from_ints(0, {1, 0, 0, 1}).pow(4) -
                      LaurentPoly::monomial(4) * LaurentPoly::from_ints(0, {1, 1}).pow(4);
    CHECK(expand(family_formula(Rank2Family::A, 2)) * LaurentPoly::one_minus_t_pow(2).pow(2) == num);
  }
  SUBCASE("two points in genus one") {
    LaurentPoly num = LaurentPoly::from_ints(0, {1, 0, 1}) *
                      (LaurentPoly::from_ints(0, {1, 0, 0, 1}).pow(2) -
                       LaurentPoly::monomial(2) * LaurentPoly::from_ints(0, {1, 1}).pow(2));
    CHECK(expand(family_formula(Rank2Family::B, 1)) * LaurentPoly::one_minus_t_pow(2).pow(2) == num);
  }
  SUBCASE("three points, second region, genus zero") {
    CHECK(expand(family_formula(Rank2Family::CII, 0)) == LaurentPoly(1));
  }
  SUBCASE("every tag against the written-out form") {
    for (auto f : {Rank2Family::A, Rank2Family::B, Rank2Family::CI, Rank2Family::CII, Rank2Family::DI,
                   Rank2Family::DII})
      for (int g = 0; g <= 3; ++g) {
        auto frac = rank2(family_tag(f).c_str(), g);
        CHECK(expand(family_formula(f, g)) * frac.den == frac.num);
        CHECK(parse_family_tag(family_tag(f)) == f);
      }
    CHECK_THROWS_AS(parse_family_tag("G"), InvalidData);
  }
}

TEST_CASE("family formulas match the oracle inside each region in even degree") {
  std::mt19937 rng(9);
  std::map<Rank2Family, int> seen;
  for (int trial = 0; trial < 600; ++trial) {
    Rank2Profile p;
    p.deltas = random_deltas(rng, 1 + trial % 4);
    p.genus = trial % 4;
    p.degree = 2 * (trial % 3);
    if (!rank2_admissible(p)) continue;
    std::optional<Rank2Family> f;
    try {
      f = rank2_family(p);
    } catch (const InvalidData&) {
      continue;  // on a boundary
    }
    REQUIRE(f.has_value());
    ++seen[*f];
    CHECK(poincare_rank2(p).poly == expand(family_formula(*f, p.genus)));
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("region classification") {
  CHECK(rank2_family(profile({"-1/3"}, 0)) == Rank2Family::A);
  CHECK(rank2_family(profile({"-1/3", "-1/5"}, 0)) == Rank2Family::B);
  CHECK(rank2_family(profile({"-9/10", "-1/5", "-1/7"}, 0)) == Rank2Family::CI);
  CHECK(rank2_family(profile({"-1/2", "-1/3", "-1/4"}, 0)) == Rank2Family::CII);
  CHECK(rank2_family(profile({"-7/8", "-1/5", "-1/7", "-1/9"}, 0)) == Rank2Family::DI);
  CHECK(rank2_family(profile({"-5/7", "-3/5", "-1/2", "-2/5"}, 0)) == Rank2Family::DII);
  CHECK_THROWS_AS(rank2_family(profile({"-1/2", "-1/4", "-1/4"}, 0)), InvalidData);
  CHECK_FALSE(rank2_family(profile({"-1/2", "-1/3", "-1/4", "-1/5", "-1/6"}, 0)).has_value());
  for (const auto& col : tables::rank2_columns()) {
    Rank2Profile p = rank2_profile(tables::instance(col, 1));
    CHECK(rank2_family(p).has_value());
  }
}
