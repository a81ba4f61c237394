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

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "engine_internal.hpp"
#include "parabetti/betti.hpp"
#include "parabetti/errors.hpp"
#include "parabetti/numeric_functions.hpp"
#include "parabetti/partition.hpp"
#include "parabetti/tilde.hpp"

namespace parabetti {

int q_order_bound(const QuasiParabolicData& r, int genus) {
  const int n = r.rank();
  return -n * n * (genus - 1) - 2 * static_cast<int>(flag_dim(r));
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_long(const Rational& x) { return -floor_long(-x); }

// Same series with its stored order raised to `order`; the dropped
// coefficients must vanish.
LaurentSeries rebase(const LaurentSeries& s, int order, const std::string& what) {
  if (s.order() >= order) return s;
  std::vector<Rational> c;
  for (int e = s.order(); e <= s.truncation(); ++e) {
    Rational v = s.coeff(e);
    if (e < order) {
      if (v != 0)
        throw CrossCheckFailure(what + ": coefficient of t^" + std::to_string(e) + " below the order bound " +
                                std::to_string(order));
      continue;
    }
    c.push_back(v);
  }
  return LaurentSeries(order, s.truncation(), std::move(c));
}

int periodic_degree(long d, int n) { return static_cast<int>(((d % n) + n) % n); }

}  // namespace

LaurentSeries harder_narasimhan_sum(const QuasiParabolicData& r, long degree, int genus, int truncation,
                                    int min_length, const BlockSeries& block, int extra_span) {
  LaurentSeries total = LaurentSeries::zero(truncation);
  const Rational mu_bar = (degree + r.alpha()) / r.rank();
  for_each_partition(r, [&](const Partition& part) {
    const int len = part.length();
    if (len < min_length) return;
    if (len == 1) {
      total += rebase(block(r, degree, truncation), q_order_bound(r, genus), "Q block");
      return;
    }
    std::vector<QuasiParabolicData> blocks;
    std::vector<int> ord;
    std::vector<Rational> alpha;
    long ord_sum = 0;
    for (int k = 0; k < len; ++k) {
      blocks.push_back(part.block(k));
      ord.push_back(q_order_bound(blocks.back(), genus));
      alpha.push_back(blocks.back().alpha());
      ord_sum += ord.back();
    }
    const std::vector<int>& n = part.ranks();
    const long sig = sigma(part);
    // A term starts at t^{2(S - sigma) + ord_sum}, S = sum_{k>l}(d_l n_k - d_k n_l),
    // so only S <= s_max matters. Writing mu_k for the slopes,
    // S = sum_{k>l} n_k n_l (mu_l - mu_k) - a_const and every summand is
    // positive, hence n_1 n_r (mu_1 - mu_r) <= s_max + a_const. All slopes lie
    // between mu_r and mu_1, and so does their weighted mean mu_bar.
    const long s_max = floor_div(truncation - ord_sum, 2) + sig;
    Rational a_const = 0;
    for (int k = 0; k < len; ++k)
      for (int l = 0; l < k; ++l) a_const += alpha[l] * n[k] - alpha[k] * n[l];
    Rational span = (s_max + a_const) / (n[0] * n[len - 1]) + extra_span;
    if (span <= 0) return;
    std::vector<long> lo(len), hi(len);
    for (int k = 0; k < len; ++k) {
      lo[k] = ceil_long(n[k] * (mu_bar - span) - alpha[k]);
      hi[k] = floor_long(n[k] * (mu_bar + span) - alpha[k]);
    }
    std::vector<long> d(len);
    std::vector<Rational> mu(len);
    std::function<void(int, long)> rec = [&](int k, long used) {
      if (k == len - 1) {
        d[k] = degree - used;
        if (d[k] < lo[k] || d[k] > hi[k]) return;
        mu[k] = (d[k] + alpha[k]) / n[k];
        if (!(mu[k] < mu[k - 1])) return;
        long s = 0;
        for (int a = 0; a < len; ++a)
          for (int b = 0; b < a; ++b) s += d[b] * n[a] - d[a] * n[b];
        const long nexp = s - sig;
        if (2 * nexp + ord_sum > truncation) return;
        LaurentSeries prod;
        for (int j = 0; j < len; ++j) {
          int tj = static_cast<int>(truncation - 2 * nexp - (ord_sum - ord[j]));
          LaurentSeries sj = rebase(block(blocks[j], d[j], tj), ord[j], "Q block");
          prod = j == 0 ? sj : prod * sj;
        }
        total += prod.shifted(static_cast<int>(2 * nexp));
        return;
      }
      for (long x = lo[k]; x <= hi[k]; ++x) {
        d[k] = x;
        mu[k] = (x + alpha[k]) / n[k];
        if (k > 0 && !(mu[k] < mu[k - 1])) break;  // slopes only grow with x
        rec(k + 1, used + x);
      }
    };
    rec(0, 0);
  });
  return total;
}

LaurentSeries RecursionSolver::Q(const QuasiParabolicData& r, long degree, int genus, int truncation) {
  const int ord = q_order_bound(r, genus);
  if (truncation < ord) return LaurentSeries(ord, truncation, {});
  const int dm = periodic_degree(degree, r.rank());
  const std::string key = r.key() + "#" + std::to_string(dm) + "#" + std::to_string(genus);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end() && it->second.truncation() >= truncation) return it->second.truncated(truncation);
  }
  LaurentSeries q = expand_series(Q_R(r, genus), truncation);
  q -= harder_narasimhan_sum(r, dm, genus, truncation, 2, [this, genus](const QuasiParabolicData& b, long e, int t) {
    return Q(b, e, genus, t);
  });
  q = rebase(q, ord, "Q_{R,d} of rank " + std::to_string(r.rank()));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(key, q);
  if (!inserted && it->second.truncation() < q.truncation()) it->second = q;
  return q;
}

size_t RecursionSolver::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

int default_truncation(const Instance& inst) {
  long dim = moduli_dim(inst.data, inst.genus);
  return static_cast<int>(std::max(2 * dim + 2, 2L));
}

LaurentSeries recursion_beta(const Instance& inst, int truncation, RecursionSolver* solver) {
  const auto& r = inst.data;
  const int g = inst.genus, n = r.rank();
  const long dim = moduli_dim(r, g);
  if (truncation < 2 * dim + 2)
    throw TruncationTooSmall("truncation " + std::to_string(truncation) + " is below 2 dim + 2 = " +
                             std::to_string(2 * dim + 2));
  RecursionSolver local;
  if (!solver) solver = &local;
  const int shift = 2 * static_cast<int>(flag_dim(r)) + n * n * (g - 1);
  LaurentSeries q = solver->Q(r, inst.degree, g, truncation - shift);
  FactoredRatFunc prefactor = FactoredRatFunc::one_minus_t_pow(2) * FactoredRatFunc::one_plus_t_pow(1, -2 * g);
  LaurentSeries p = (q.shifted(shift) * expand_series(prefactor, truncation)).truncated(truncation);
  if (p.truncation() < truncation)
    throw CrossCheckFailure("recursion: series known only through t^" + std::to_string(p.truncation()));
  for (int e = static_cast<int>(std::max(2 * dim + 1, static_cast<long>(p.order()))); e <= truncation; ++e)
    if (p.coeff(e) != 0)
      throw TruncationTooSmall("recursion: nonzero coefficient of t^" + std::to_string(e) + " above 2 dim = " +
                               std::to_string(2 * dim));
  return p;
}

BettiResult recursion(const Instance& inst, const ComputeOptions& opts, RecursionSolver* solver) {
  const bool ss = ss_equals_stable(inst);
  detail::require_stable(inst, opts, ss);
  const int n = opts.truncation.value_or(default_truncation(inst));
  LaurentSeries p = recursion_beta(inst, n, solver);
  for (int e = p.order(); e < 0; ++e)
    if (p.coeff(e) != 0) throw NonPolynomialResult("recursion: nonzero coefficient of t^" + std::to_string(e));
  const long dim = moduli_dim(inst.data, inst.genus);
  LaurentPoly poly = dim >= 0 ? p.truncated(static_cast<int>(2 * dim)).to_poly() : LaurentPoly();
  return assemble_result(poly, dim, Method::Recursion, ss);
}

SiegelReport siegel_identity_check(const QuasiParabolicData& r, int genus, long degree, int truncation) {
  const int n = r.rank();
  const int q_trunc = truncation - 2 * static_cast<int>(flag_dim(r)) - n * n * (genus - 1);
  SiegelReport rep;
  rep.q_truncation = q_trunc;
  std::map<std::string, FactoredRatFunc> cache;
  std::mutex cache_mutex;
  BlockSeries closed = [&](const QuasiParabolicData& b, long e, int t) {
    const int dm = periodic_degree(e, b.rank());
    const std::string key = b.key() + "#" + std::to_string(dm);
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      auto it = cache.find(key);
      if (it != cache.end()) return expand_series(it->second, t);
    }
    FactoredRatFunc f = Q_closed(b, dm, genus);
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      cache.emplace(key, f);
    }
    return expand_series(f, t);
  };
  LaurentSeries lhs = expand_series(Q_R(r, genus), q_trunc);
  LaurentSeries rhs = harder_narasimhan_sum(r, degree, genus, q_trunc, 1, closed);
  if (rhs.truncation() < q_trunc) {
    rep.detail = "right-hand side known only through t^" + std::to_string(rhs.truncation());
    return rep;
  }
  rep.first_difference = lhs.first_difference(rhs);
  rep.holds = !rep.first_difference.has_value();
  if (!rep.holds) {
    std::ostringstream os;
    int e = *rep.first_difference;
    os << "coefficient of t^" << e << ": Q_R has " << lhs.coeff(e) << ", the sum has " << rhs.coeff(e);
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace parabetti
