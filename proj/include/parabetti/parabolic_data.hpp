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

#include "parabetti/rational.hpp"

namespace parabetti {

/// Flag type and weights at one marked point.
///
/// multiplicities[i] is the dimension of the i-th graded piece of the flag
/// (zero rows are allowed); weights are strictly increasing in [0, 1).
struct ParabolicPoint {
  std::vector<int> multiplicities;
  std::vector<Rational> weights;

  int rank() const;
  size_t length() const { return multiplicities.size(); }
  friend bool operator==(const ParabolicPoint&, const ParabolicPoint&) = default;
};

// Per-point multiplicity vectors, indexed [point][row].
using Multiplicities = std::vector<std::vector<int>>;

/// Quasi-parabolic data R: marked points with flag types of a common rank
/// n(R) and rational weights.
class QuasiParabolicData {
 public:
  QuasiParabolicData() = default;
  // Validates weights and multiplicities; requires at least one point.
  explicit QuasiParabolicData(std::vector<ParabolicPoint> points);
  // Data with no marked points (ordinary vector bundles of rank n).
  static QuasiParabolicData without_points(int rank);

  int rank() const { return rank_; }
  size_t num_points() const { return points_.size(); }
  const std::vector<ParabolicPoint>& points() const { return points_; }
  const ParabolicPoint& point(size_t p) const { return points_[p]; }
  Multiplicities multiplicities() const;

  // sum_P sum_i R^P_i alpha^P_i
  Rational alpha() const;

  // The data with the same points and weights but multiplicities L, every
  // point summing to `rank`.
  QuasiParabolicData restrict(const Multiplicities& L, int rank) const;

  // Stable textual key (multiplicities and weights), used for memoization.
  std::string key() const;

  friend bool operator==(const QuasiParabolicData&, const QuasiParabolicData&) = default;

 private:
  int rank_ = 0;
  std::vector<ParabolicPoint> points_;
};

struct Instance {
  int genus = 0;
  long degree = 0;
  QuasiParabolicData data;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Drops the zero-multiplicity rows (Seshadri form). alpha() is unchanged.
QuasiParabolicData normalize_seshadri(const QuasiParabolicData& r);

// Inverse of normalize_seshadri: reinstates zero rows against the ambient
// weight family of each point. Every weight of `reduced` must occur in the
// corresponding ambient list.
QuasiParabolicData embed_seshadri(const QuasiParabolicData& reduced,
                                  const std::vector<std::vector<Rational>>& ambient_weights);

// All sub-data L with 0 <= L <= R, equal per-point sums and 0 < n(L) < n(R).
// Order: by rank, then lexicographically per point with point 0 slowest.
std::vector<QuasiParabolicData> enumerate_subdata(const QuasiParabolicData& r);

// A sub-data L and an integer e with (e + alpha(L)) / n(L) equal to the
// parabolic slope of the instance.
struct SlopeCoincidence {
  QuasiParabolicData sub;
  Integer degree;
};

std::optional<SlopeCoincidence> find_slope_coincidence(const Instance& inst);

// True iff no proper sub-data can have the same parabolic slope, so that
// every semistable object is stable.
bool ss_equals_stable(const Instance& inst);

// Parabolic slope (d + alpha(R)) / n(R).
Rational parabolic_slope(const Instance& inst);

}  // namespace parabetti
