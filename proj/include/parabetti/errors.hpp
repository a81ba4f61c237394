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

#include <stdexcept>
#include <string>

namespace parabetti {

// Invalid user-supplied data (bad weights, unequal ranks, malformed documents).
class InvalidData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation not supported for the given operands (e.g. inverting a
// non-monomial Laurent polynomial).
class Unsupported : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonDivisible : public std::domain_error {
 public:
  NonDivisible(const std::string& what, std::string remainder)
      : std::domain_error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

class PoleAtPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZetaAtomPole : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotPolynomial : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Base for the engine's self-certification failures; the CLI maps all of
// these to exit code 3.
class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPolynomialResult : public CrossCheckFailure {
 public:
  using CrossCheckFailure::CrossCheckFailure;
};

class MismatchAgainstClosed : public CrossCheckFailure {
 public:
  using CrossCheckFailure::CrossCheckFailure;
};

class TruncationTooSmall : public CrossCheckFailure {
 public:
  using CrossCheckFailure::CrossCheckFailure;
};

class StrictSemistable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MethodInapplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IntegralPsi : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace parabetti
