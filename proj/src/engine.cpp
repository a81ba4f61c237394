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

#include "engine_internal.hpp"
#include "parabetti/betti.hpp"
#include "parabetti/errors.hpp"
#include "parabetti/rank2.hpp"

namespace parabetti {

std::string method_name(Method m) {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::QClosed: return "qclosed";
    case Method::Recursion: return "recursion";
    case Method::Rank2: return "rank2";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (auto m : {Method::Closed, Method::QClosed, Method::Recursion, Method::Rank2})
    if (method_name(m) == name) return m;
  throw InvalidData("unknown method '" + name + "' (expected closed, qclosed, recursion or rank2)");
}

namespace {

std::optional<int> first_difference(const LaurentPoly& a, const LaurentPoly& b) {
  if (a == b) return std::nullopt;
  LaurentPoly diff = a - b;
  return diff.low_degree();
}

BettiResult rank2_method(const Instance& inst, const ComputeOptions& opts) {
  Rank2Profile prof = rank2_profile(inst);
  const bool ss = ss_equals_stable(inst);
  detail::require_stable(inst, opts, ss);
  BettiResult res = poincare_rank2(prof);
  res.ss_eq_stable = ss;
  return res;
}

}  // namespace

BettiResult compute(const Instance& inst, Method method, const ComputeOptions& opts) {
  BettiResult res;
  switch (method) {
    case Method::Closed: return poincare_closed(inst, opts);
    case Method::QClosed: res = q_closed(inst, opts); break;
    case Method::Recursion: res = recursion(inst, opts); break;
    case Method::Rank2: res = rank2_method(inst, opts); break;
  }
  if (opts.cross_check) {
    BettiResult ref = poincare_closed(inst, opts);
    if (auto e = first_difference(res.poly, ref.poly)) {
      std::ostringstream os;
      os << method_name(method) << " disagrees with closed at t^" << *e << ": " << res.poly.coeff(*e) << " vs "
         << ref.poly.coeff(*e);
      throw MismatchAgainstClosed(os.str());
    }
  }
  return res;
}

std::vector<Method> applicable_methods(const Instance& inst) {
  std::vector<Method> out{Method::Closed, Method::QClosed, Method::Recursion};
  if (inst.data.rank() == 2 && rank2_admissible(rank2_profile(inst))) out.push_back(Method::Rank2);
  return out;
}

Comparison compare_methods(const Instance& inst, const ComputeOptions& opts) {
  Comparison cmp;
  ComputeOptions o = opts;
  o.cross_check = false;
  for (Method m : applicable_methods(inst)) cmp.results.push_back(compute(inst, m, o));
  const BettiResult& ref = cmp.results.front();
  for (size_t i = 1; i < cmp.results.size(); ++i) {
    const BettiResult& r = cmp.results[i];
    auto e = first_difference(r.poly, ref.poly);
    if (!e && r.dim == ref.dim) continue;
    cmp.agree = false;
    std::ostringstream os;
    if (e) {
      os << method_name(r.method) << " differs from " << method_name(ref.method) << " at t^" << *e << ": "
         << r.poly.coeff(*e) << " vs " << ref.poly.coeff(*e);
    } else {
      os << method_name(r.method) << " reports dimension " << r.dim << ", " << method_name(ref.method)
         << " reports " << ref.dim;
    }
    if (!cmp.first_difference || (e && *e < *cmp.first_difference)) cmp.first_difference = e;
    if (cmp.detail.empty()) cmp.detail = os.str();
  }
  return cmp;
}

}  // namespace parabetti
