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

#include "parabetti/numeric_functions.hpp"

#include "parabetti/errors.hpp"

namespace parabetti {

long sigma(const Partition& part) {
  const int r = part.length();
  long total = 0;
  for (int kk = 1; kk <= r; ++kk) {
    const int col = r - kk;  // column r-k+1 in 1-based notation
    for (size_t p = 0; p < part.matrices().size(); ++p) {
      const auto& m = part.matrices()[p];
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t t = 0; t < i; ++t)
          for (int l = 0; l < col; ++l) total += static_cast<long>(m[i][col]) * m[t][l];
    }
  }
  return total;
}

long sigma_prime(const Partition& part) {
  const int r = part.length();
  long total = 0;
  for (const auto& m : part.matrices())
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < k; ++l)
        for (size_t i = 0; i < m.size(); ++i)
          for (size_t t = i + 1; t < m.size(); ++t) total += static_cast<long>(m[i][k]) * m[t][l];
  return total;
}

long delta(const QuasiParabolicData& r, const QuasiParabolicData& l) {
  if (r.num_points() != l.num_points()) throw InvalidData("delta: sub-data has the wrong number of points");
  long total = 0;
  for (size_t p = 0; p < r.num_points(); ++p) {
    const auto& rm = r.point(p).multiplicities;
    const auto& lm = l.point(p).multiplicities;
    for (size_t i = 0; i < rm.size(); ++i)
      for (size_t t = 0; t < i; ++t) total += static_cast<long>(rm[i] - lm[i]) * lm[t];
  }
  return total;
}

namespace {

long pairing(const std::vector<int>& ranks, const std::vector<long>& degrees, PairingReading reading) {
  if (ranks.size() != degrees.size()) throw InvalidData("ranks and degrees differ in length");
  long total = 0;
  for (size_t k = 0; k < ranks.size(); ++k)
    for (size_t l = 0; l < k; ++l) {
      long other = reading == PairingReading::Printed ? ranks[k] : ranks[l];
      total += degrees[l] * ranks[k] - degrees[k] * other;
    }
  return total;
}

long rank_products(const std::vector<int>& ranks) {
  long total = 0;
  for (size_t k = 0; k < ranks.size(); ++k)
    for (size_t l = 0; l < k; ++l) total += static_cast<long>(ranks[l]) * ranks[k];
  return total;
}

}  // namespace

long chi_dr(const std::vector<int>& ranks, const std::vector<long>& degrees, int genus, PairingReading reading) {
  long rp = rank_products(ranks) * (genus - 1);
  return pairing(ranks, degrees, reading) + (reading == PairingReading::Printed ? rp : -rp);
}

long N_exp(const Partition& part, const std::vector<long>& degrees) {
  return pairing(part.ranks(), degrees, PairingReading::Antisymmetric) - sigma(part);
}

long C_exp(const Partition& part, const std::vector<long>& degrees, int genus, PairingReading reading) {
  return sigma(part) - pairing(part.ranks(), degrees, reading) + rank_products(part.ranks()) * (genus - 1);
}

long M_prime(const Partition& part, long degree) {
  const long n = part.data().rank();
  const long n1 = part.rank(0), nr = part.rank(part.length() - 1);
  return -(n - nr) * degree - sigma(part) + (2 * n - n1 - nr);
}

long M_floor(const Partition& part, const Rational& lambda) {
  long total = 0;
  long prefix_rank = 0;
  for (int k = 0; k + 1 < part.length(); ++k) {
    prefix_rank += part.rank(k);
    Rational x = prefix_rank * lambda - part.prefix(k + 1).alpha();
    total += static_cast<long>(part.rank(k) + part.rank(k + 1)) * floor_long(x);
  }
  return total;
}

long M_g(const Partition& part, const Rational& lambda, int genus) {
  long total = M_floor(part, lambda);
  for (int k = 0; k + 1 < part.length(); ++k) total += part.rank(k) + part.rank(k + 1);
  return total + (genus - 1) * rank_products(part.ranks());
}

long flag_dim(const QuasiParabolicData& r) {
  long total = 0;
  const long n = r.rank();
  for (const auto& pt : r.points()) {
    long sq = 0;
    for (int m : pt.multiplicities) sq += static_cast<long>(m) * m;
    total += (n * n - sq) / 2;
  }
  return total;
}

long moduli_dim(const QuasiParabolicData& r, int genus) {
  const long n = r.rank();
  return flag_dim(r) + (n * n - 1) * (genus - 1);
}

Rational d_lambda(const QuasiParabolicData& l, const Rational& lambda) { return l.rank() * lambda - l.alpha(); }

}  // namespace parabetti
