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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace parabetti {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator (mpq_class canonicalizes on every arithmetic result).
// Note: the two-argument mpq_class constructor does not reduce; use
// make_rational for num/den construction.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Exact floor: floor(-1/3) == -1.
Integer floor(const Rational& x);
long floor_long(const Rational& x);

bool is_integer(const Rational& x);

// Converts an integral rational to long; throws std::overflow_error when the
// value is not integral or does not fit.
long to_long(const Rational& x);

// Parses "a/b", "-a/b" or "a". Decimal notation is rejected with InvalidData.
Rational parse_rational(std::string_view text);

// "a/b" or "a" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace parabetti
