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

#include "parabetti/factored_rat_func.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parabetti/errors.hpp"

namespace parabetti {

FactoredRatFunc::FactoredRatFunc(const LaurentPoly& p) : numer_(p) { normalize(); }

FactoredRatFunc::FactoredRatFunc(int shift, LaurentPoly numer, FactorMap factors)
    : shift_(shift), numer_(std::move(numer)), factors_(std::move(factors)) {
  normalize();
}

void FactoredRatFunc::normalize() {
  if (numer_.is_zero()) {
    shift_ = 0;
    factors_.clear();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (it->first <= 0) throw std::invalid_argument("factor (1 - t^k) requires k > 0");
    if (it->second == 0)
      it = factors_.erase(it);
    else
      ++it;
  }
  int lo = numer_.low_degree();
  if (lo != 0) {
    shift_ += lo;
    numer_ = numer_.shifted(-lo);
  }
}

FactoredRatFunc FactoredRatFunc::monomial(int exponent, const Rational& c) {
  return FactoredRatFunc(exponent, LaurentPoly(c), {});
}

FactoredRatFunc FactoredRatFunc::one_minus_t_pow(int k, int e) { return FactoredRatFunc(0, LaurentPoly(1), {{k, e}}); }

FactoredRatFunc FactoredRatFunc::t_pow_minus_one(int k) { return FactoredRatFunc(0, LaurentPoly(-1), {{k, 1}}); }

FactoredRatFunc FactoredRatFunc::one_plus_t_pow(int k, int e) {
  if (k <= 0) throw std::invalid_argument("one_plus_t_pow requires k > 0");
  if (e >= 0) {
    LaurentPoly base = LaurentPoly(1) + LaurentPoly::monomial(k);
    return FactoredRatFunc(base.pow(e));
  }
  return FactoredRatFunc(0, LaurentPoly(1), {{k, -e}, {2 * k, e}});
}

FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FactoredRatFunc::FactorMap f = a.factors_;
  for (auto [k, e] : b.factors_) f[k] += e;
  return FactoredRatFunc(a.shift_ + b.shift_, a.numer_ * b.numer_, std::move(f));
}

namespace {

// Numerators of a and b over the common factor set (exponent min(e_a, e_b)
// per k), each including its own t-shift.
struct CommonForm {
  LaurentPoly a;
  LaurentPoly b;
  FactoredRatFunc::FactorMap factors;
};

CommonForm common_form(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  CommonForm cf;
  FactoredRatFunc::FactorMap keys = a.factors();
  for (auto [k, e] : b.factors()) keys.emplace(k, 0);
  cf.a = a.numer().shifted(a.shift());
  cf.b = b.numer().shifted(b.shift());
  for (auto [k, unused] : keys) {
    (void)unused;
    int ea = a.factors().count(k) ? a.factors().at(k) : 0;
    int eb = b.factors().count(k) ? b.factors().at(k) : 0;
    int m = std::min(ea, eb);
    if (ea - m > 0) cf.a.mul_one_minus_t_pow(k, ea - m);
    if (eb - m > 0) cf.b.mul_one_minus_t_pow(k, eb - m);
    if (m != 0) cf.factors[k] = m;
  }
  return cf;
}

}  // namespace

FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  CommonForm cf = common_form(a, b);
  return FactoredRatFunc(0, cf.a + cf.b, std::move(cf.factors));
}

FactoredRatFunc operator-(const FactoredRatFunc& a, const FactoredRatFunc& b) { return a + (-b); }

FactoredRatFunc FactoredRatFunc::operator-() const {
  FactoredRatFunc r = *this;
  r.numer_ = -r.numer_;
  return r;
}

FactoredRatFunc FactoredRatFunc::pow(int e) const {
  if (e < 0 && !numer_.is_monomial())
    throw Unsupported("negative power of a rational function with non-monomial numerator");
  FactorMap f;
  for (auto [k, x] : factors_) f[k] = x * e;
  return FactoredRatFunc(shift_ * e, numer_.pow(e), std::move(f));
}

FactoredRatFunc FactoredRatFunc::shifted(int k) const {
  if (is_zero()) return {};
  return FactoredRatFunc(shift_ + k, numer_, factors_);
}

bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  CommonForm cf = common_form(a, b);
  return cf.a == cf.b;
}

LaurentPoly FactoredRatFunc::to_laurent_poly() const {
  if (is_zero()) return {};
  LaurentPoly num = numer_;
  LaurentPoly den(1);
  for (auto [k, e] : factors_) {
    if (e > 0)
      num.mul_one_minus_t_pow(k, e);
    else
      den.mul_one_minus_t_pow(k, -e);
  }
  return divide_exact(num, den).shifted(shift_);
}

std::string FactoredRatFunc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (shift_ != 0) os << "t^" << shift_ << " * ";
  os << "(" << numer_.to_string() << ")";
  for (auto [k, e] : factors_) os << " * (1 - t^" << k << ")^" << e;
  return os.str();
}

LaurentSeries expand_series(const FactoredRatFunc& f, int n) {
  if (n > kMaxTruncation) throw std::length_error("truncation bound exceeds the configured maximum");
  if (f.is_zero()) return LaurentSeries::zero(n);
  const int lo = f.shift();
  if (n < lo) return LaurentSeries(lo, n, {});
  const size_t len = static_cast<size_t>(n - lo + 1);
  std::vector<Rational> c(len);
  const auto& nc = f.numer().coefficients();
  for (size_t i = 0; i < nc.size() && i < len; ++i) c[i] = nc[i];
  for (auto [k, e] : f.factors()) {
    const size_t step = static_cast<size_t>(k);
    if (step >= len) continue;
    if (e > 0) {
      for (int rep = 0; rep < e; ++rep)
        for (size_t i = len; i-- > step;) c[i] -= c[i - step];
    } else {
      for (int rep = 0; rep < -e; ++rep)
        for (size_t i = step; i < len; ++i) c[i] += c[i - step];
    }
  }
  return LaurentSeries(lo, n, std::move(c));
}

Rational evaluate(const FactoredRatFunc& f, const Rational& x0) {
  if (f.is_zero()) return 0;
  for (auto [k, e] : f.factors())
    if (e < 0 && LaurentPoly::monomial(k).evaluate(x0) == 1)
      throw PoleAtPoint("denominator factor (1 - t^" + std::to_string(k) + ") vanishes");
  Rational v = f.numer().evaluate(x0);
  for (auto [k, e] : f.factors()) {
    Rational base = 1 - LaurentPoly::monomial(k).evaluate(x0);
    for (int i = 0; i < (e > 0 ? e : -e); ++i) {
      if (e > 0)
        v *= base;
      else
        v /= base;
    }
  }
  if (f.shift() != 0) v *= LaurentPoly::monomial(f.shift()).evaluate(x0);
  return v;
}

}  // namespace parabetti
