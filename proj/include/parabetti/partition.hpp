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
#include <vector>

#include "parabetti/parabolic_data.hpp"

namespace parabetti {

/// Intersection type I of data R: for every point P a matrix I^P[i][k] with
/// row sums R^P_i and column sums n_k (the same at every point).
///
/// Blocks are indexed from 0 here: block(k) is R^I_{k+1} in 1-based
/// notation, prefix(j) is R^I_{<=j} and suffix(j) is R^I_{>=j+1}.
class Partition {
 public:
  using Matrix = std::vector<std::vector<int>>;

  Partition(QuasiParabolicData data, std::vector<int> ranks, std::vector<Matrix> matrices);

  const QuasiParabolicData& data() const { return data_; }
  int length() const { return static_cast<int>(ranks_.size()); }
  const std::vector<int>& ranks() const { return ranks_; }
  int rank(int k) const { return ranks_[k]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  int entry(size_t p, int i, int k) const { return matrices_[p][i][k]; }

  QuasiParabolicData block(int k) const;
  // Sum of blocks [0, j), 0 < j <= length().
  QuasiParabolicData prefix(int j) const;
  // Sum of blocks [j, length()), 0 <= j < length().
  QuasiParabolicData suffix(int j) const;
  // The induced partitions of prefix(j) and suffix(j).
  Partition head(int j) const;
  Partition tail(int j) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  QuasiParabolicData columns(int begin, int end) const;
  Partition sub_partition(int begin, int end) const;

  QuasiParabolicData data_;
  std::vector<int> ranks_;
  std::vector<Matrix> matrices_;
};

// Compositions of n into positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int n);

// Calls f on every partition of r: compositions (n_1..n_r) in lexicographic
// order, then per-point matrices in row-major lexicographic order with point
// 0 varying slowest.
void for_each_partition(const QuasiParabolicData& r, const std::function<void(const Partition&)>& f);

std::vector<Partition> enumerate_partitions(const QuasiParabolicData& r);

}  // namespace parabetti
