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

// Families of small quasi-parabolic data used by the property suites.

#pragma once

#include <vector>

#include "parabetti/parabolic_data.hpp"
#include "parabetti/partition.hpp"

namespace fixtures {

// Flag types of rank n: all compositions, plus one type with a zero row.
inline std::vector<std::vector<int>> flag_types(int n) {
  auto types = parabetti::compositions(n);
  if (n >= 2) types.push_back({1, 0, n - 1});
  return types;
}

// Generic weights for a flag of length m at point p: strictly increasing in
// [0, 1), distinct between points.
inline std::vector<parabetti::Rational> generic_weights(size_t m, size_t p) {
  std::vector<parabetti::Rational> w;
  for (size_t i = 0; i < m; ++i)
    w.push_back(parabetti::make_rational(static_cast<long>(7 * i + p + 1), static_cast<long>(7 * (m + 1))));
  return w;
}

inline parabetti::QuasiParabolicData make_data(const std::vector<std::vector<int>>& types) {
  std::vector<parabetti::ParabolicPoint> pts;
  for (size_t p = 0; p < types.size(); ++p) pts.push_back({types[p], generic_weights(types[p].size(), p)});
  return parabetti::QuasiParabolicData(std::move(pts));
}

// All data of rank <= max_rank with 1 or 2 points built from flag_types;
// two-point data are taken up to ordering of the points.
inline std::vector<parabetti::QuasiParabolicData> small_data(int max_rank, int max_points = 2) {
  std::vector<parabetti::QuasiParabolicData> out;
  for (int n = 1; n <= max_rank; ++n) {
    auto types = flag_types(n);
    for (size_t a = 0; a < types.size(); ++a) {
      out.push_back(make_data({types[a]}));
      if (max_points < 2) continue;
      for (size_t b = a; b < types.size(); ++b) out.push_back(make_data({types[a], types[b]}));
    }
  }
  return out;
}

}  // namespace fixtures
