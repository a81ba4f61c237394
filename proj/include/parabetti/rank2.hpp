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

#include <optional>
#include <string>
#include <vector>

#include "parabetti/betti.hpp"
#include "parabetti/factored_rat_func.hpp"
#include "parabetti/parabolic_data.hpp"

namespace parabetti {

// Rank-2 data reduced to what the explicit formula needs: one
// delta = alpha_1 - alpha_2 per point with a nontrivial flag.
struct Rank2Profile {
  std::vector<Rational> deltas;
  long degree = 0;
  int genus = 0;
};

// Throws MethodInapplicable unless n(R) = 2. Points with a trivial flag
// (after dropping zero multiplicities) carry no delta.
Rank2Profile rank2_profile(const Instance& inst);

// psi for the sign pattern `in_subset` (true means chi = +1).
Rational rank2_psi(const Rank2Profile& prof, const std::vector<bool>& in_subset);

// True when no psi is an integer, the standing assumption of the formula.
bool rank2_admissible(const Rank2Profile& prof);

BettiResult poincare_rank2(const Rank2Profile& prof);
bool exists_stable_rank2(const Rank2Profile& prof);

enum class Rank2Family { A, B, CI, CII, DI, DII };

std::string family_tag(Rank2Family f);
Rank2Family parse_family_tag(const std::string& tag);
FactoredRatFunc family_formula(Rank2Family f, int genus);

// Region of a profile with 1..4 nontrivial points. Empty for other sizes.
// Throws InvalidData on a region boundary.
std::optional<Rank2Family> rank2_family(const Rank2Profile& prof);

}  // namespace parabetti
