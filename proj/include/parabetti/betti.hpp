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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "parabetti/factored_rat_func.hpp"
#include "parabetti/laurent_poly.hpp"
#include "parabetti/laurent_series.hpp"
#include "parabetti/parabolic_data.hpp"

namespace parabetti {

enum class Method { Closed, QClosed, Recursion, Rank2 };

std::string method_name(Method m);
// "closed", "qclosed", "recursion", "rank2"; throws InvalidData otherwise.
Method parse_method(const std::string& name);

/// Poincare polynomial of the moduli space with Betti numbers b_0..b_{2 dim}.
struct BettiResult {
  long dim = 0;
  LaurentPoly poly;
  std::vector<long> betti;  // empty when the moduli space is empty
  bool empty = true;
  bool ss_eq_stable = true;
  Method method = Method::Closed;
};

// Validates a computed polynomial (support in 0..2 dim, integral, and when
// ss_eq_stable also non-negative, palindromic, b_0 = 1) and fills in the
// Betti vector. Throws NonPolynomialResult on failure.
BettiResult assemble_result(const LaurentPoly& poly, long dim, Method method, bool ss_eq_stable);

struct ComputeOptions {
  std::optional<int> truncation;  // recursion only; default 2 dim + 2
  bool force = false;             // compute even when ss != stable
  bool cross_check = false;       // compare non-closed methods against the closed formula
};

// The Poincare polynomial as the closed sum over partitions, before the
// exact division is carried out.
FactoredRatFunc closed_formula_sum(const Instance& inst);
BettiResult poincare_closed(const Instance& inst, const ComputeOptions& opts = {});

// Q_{R,d} by the closed sum over partitions with the M' and floor exponents.
FactoredRatFunc Q_closed(const QuasiParabolicData& r, long degree, int genus);
// P_{R,d} = t^{2 dim F + n^2(g-1)} (1 - t^2) / (1 + t)^{2g} Q_{R,d}
FactoredRatFunc P_from_Q(const FactoredRatFunc& q, const QuasiParabolicData& r, int genus);
BettiResult q_closed(const Instance& inst, const ComputeOptions& opts = {});

// Lower bound -n^2(g-1) - 2 dim F_R for the t-order of every Q_{R,d}.
int q_order_bound(const QuasiParabolicData& r, int genus);

// Supplies Q_{R',d'} through a given exponent.
using BlockSeries = std::function<LaurentSeries(const QuasiParabolicData&, long, int)>;

// sum over partitions I of length >= min_length and degree tuples with
// sum d and strictly decreasing parabolic slopes of
//   t^{2 N_R(I; d_1..d_r)} prod_k Q_{R^I_k, d_k},
// known through t^truncation. Tuples are enumerated in a box that provably
// contains every tuple whose term starts at or below the truncation;
// extra_span widens that box (tests use it to confirm completeness).
LaurentSeries harder_narasimhan_sum(const QuasiParabolicData& r, long degree, int genus, int truncation,
                                    int min_length, const BlockSeries& block, int extra_span = 0);

/// Solves the recursion for Q_{R,d} as truncated series, memoized on
/// (data, degree mod rank, genus). Safe to share between threads.
class RecursionSolver {
 public:
  LaurentSeries Q(const QuasiParabolicData& r, long degree, int genus, int truncation);
  size_t memo_size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, LaurentSeries> memo_;
};

// P_{R,d} through t^N from the recursion. Throws TruncationTooSmall when the
// coefficients in (2 dim, N] are not all zero.
LaurentSeries recursion_beta(const Instance& inst, int truncation, RecursionSolver* solver = nullptr);
BettiResult recursion(const Instance& inst, const ComputeOptions& opts = {}, RecursionSolver* solver = nullptr);

int default_truncation(const Instance& inst);

struct SiegelReport {
  bool holds = false;
  int q_truncation = 0;                    // exponent window checked on the Q side
  std::optional<int> first_difference;     // exponent of the first mismatch
  std::string detail;
};

// Checks Q_R = sum_{r>=1} sum_I sum_degrees t^{2N} prod Q_{R^I_k, d_k} with
// every Q_{R',d'} taken from Q_closed. N bounds the exponent on the
// Poincare side; the Q side is checked up to N - 2 dim F - n^2(g-1).
SiegelReport siegel_identity_check(const QuasiParabolicData& r, int genus, long degree, int truncation);

BettiResult compute(const Instance& inst, Method method, const ComputeOptions& opts = {});

std::vector<Method> applicable_methods(const Instance& inst);

struct Comparison {
  std::vector<BettiResult> results;
  bool agree = true;
  std::optional<int> first_difference;
  std::string detail;
};

// Runs every applicable method; agree is false (with the first differing
// exponent) when any two results differ.
Comparison compare_methods(const Instance& inst, const ComputeOptions& opts = {});

}  // namespace parabetti
