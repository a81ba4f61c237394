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

// Betti numbers up to the middle dimension for the reference rank 2, 3 and
// 4 tables, and the data that realizes each column.

#pragma once

#include <string>
#include <vector>

#include "parabetti/parabolic_data.hpp"
#include "parabetti/rational.hpp"

namespace tables {

struct Column {
  std::string name;            // e.g. "rank2 F"
  int genus;
  std::vector<long> prefix;    // beta_0 .. beta_middle; {0} means empty
  std::vector<std::vector<std::string>> weights;  // one list per point, full flags
  std::vector<long> degrees;   // degrees the column applies to
};

inline parabetti::Instance instance(const Column& c, long degree) {
  std::vector<parabetti::ParabolicPoint> pts;
  for (const auto& w : c.weights) {
    parabetti::ParabolicPoint p;
    p.multiplicities.assign(w.size(), 1);
    for (const auto& s : w) p.weights.push_back(parabetti::parse_rational(s));
    pts.push_back(p);
  }
  return {c.genus, degree, parabetti::QuasiParabolicData(pts)};
}

using W = std::vector<std::vector<std::string>>;

// Every case has a point with weight gap 1/2. An elementary transformation
// at such a point shifts the degree by one and keeps the region, so these
// weights give the same answer in every degree.
inline const std::vector<std::pair<std::string, W>>& rank2_cases() {
  static const std::vector<std::pair<std::string, W>> cases = {
      {"A", {{"0", "1/3"}}},
      {"B", {{"0", "1/3"}, {"0", "2/5"}}},
      {"C", {{"0", "1/2"}, {"0", "1/10"}, {"0", "1/7"}}},
      {"D", {{"0", "1/2"}, {"0", "1/3"}, {"0", "1/4"}}},
      {"E", {{"0", "1/2"}, {"0", "1/10"}, {"0", "1/7"}, {"0", "1/9"}}},
      {"F", {{"0", "5/7"}, {"0", "3/5"}, {"0", "1/2"}, {"0", "2/5"}}},
  };
  return cases;
}

inline std::vector<Column> rank2_columns() {
  const std::vector<std::vector<std::vector<long>>> by_genus = {
      {{0}, {0}, {0}, {1}, {0}, {1, 0}},
      {{1, 0}, {1, 0, 2}, {1, 0, 3, 0}, {1, 0, 4, 2}, {1, 0, 4, 0, 6}, {1, 0, 5, 2, 8}},
      {{1, 0, 2, 4, 2},
       {1, 0, 3, 4, 4, 8},
       {1, 0, 4, 4, 7, 12, 8},
       {1, 0, 4, 4, 8, 16, 14},
       {1, 0, 5, 4, 11, 16, 15, 24},
       {1, 0, 5, 4, 12, 20, 22, 32}},
      {{1, 0, 2, 6, 3, 12, 18, 12},
       {1, 0, 3, 6, 5, 18, 21, 24, 36},
       {1, 0, 4, 6, 8, 24, 26, 42, 57, 48},
       {1, 0, 4, 6, 8, 24, 27, 48, 72, 68},
       {1, 0, 5, 6, 12, 30, 34, 66, 83, 90, 114},
       {1, 0, 5, 6, 12, 30, 35, 72, 99, 116, 144}},
  };
  std::vector<Column> out;
  for (int g = 0; g <= 3; ++g)
    for (size_t c = 0; c < rank2_cases().size(); ++c)
      out.push_back({"rank2 " + rank2_cases()[c].first, g, by_genus[g][c], rank2_cases()[c].second, {0, 1, 2, 3}});
  return out;
}

inline const W& rank3_two_points() {
  static const W w = {{"0", "1/12", "3/12"}, {"1/12", "5/12", "6/12"}};
  return w;
}

inline std::vector<Column> rank3_columns() {
  const W one = {{"0", "1/12", "3/12"}};
  const W one_alt = {{"0", "1/5", "1/2"}};
  const std::vector<std::vector<long>> a = {
      {0},
      {1, 0, 2, 0},
      {1, 0, 3, 4, 7, 16, 18, 36, 45, 56, 70, 64},
      {1, 0, 3, 6, 7, 24, 28, 60, 103, 140, 261, 354, 537, 780, 998, 1380, 1652, 1936, 2170, 2160}};
  const std::vector<std::vector<long>> b = {
      {0},
      {1, 0, 5, 2, 12, 6, 16},
      {1, 0, 5, 4, 15, 24, 40, 80, 108, 188, 251, 344, 436, 480, 528},
      {1, 0, 5, 6, 15, 36, 49, 120, 176, 314, 531, 784, 1312, 1878, 2816, 4036, 5454, 7442, 9346, 11526, 13394,
       14562, 15210}};
  const std::vector<std::vector<long>> c = {
      {0},
      {1, 0, 4, 0, 8, 0, 10},
      {1, 0, 5, 4, 15, 24, 39, 76, 98, 164, 203, 264, 318, 332, 370},
      {1, 0, 5, 6, 15, 36, 49, 120, 176, 314, 530, 778, 1293, 1828, 2697, 3788, 4983, 6610, 8007, 9572, 10812,
       11508, 11984}};
  std::vector<Column> out;
  for (int g = 0; g <= 3; ++g) {
    out.push_back({"rank3 A", g, a[g], one, {0, 1, 2}});
    out.push_back({"rank3 A", g, a[g], one_alt, {0, 1, 2}});
    out.push_back({"rank3 B", g, b[g], rank3_two_points(), {0, 2, 3}});
    out.push_back({"rank3 C", g, c[g], rank3_two_points(), {1, 4}});
  }
  return out;
}

inline const W& rank4_first() {
  static const W w = {{"0", "1/8", "1/4", "1/2"}};
  return w;
}
inline const W& rank4_second() {
  static const W w = {{"0", "1/5", "4/5", "9/10"}};
  return w;
}

inline std::vector<Column> rank4_columns() {
  const std::vector<std::vector<long>> a = {
      {0},
      {1, 0, 4, 2, 8, 4, 10},
      {1, 0, 4, 4, 11, 20, 31, 64, 90, 164, 241, 376, 563, 792, 1144, 1508, 2003, 2492, 2989, 3424, 3675, 3816}};
  const std::vector<std::vector<long>> b = {
      {0},
      {1, 0, 3, 0, 5, 0, 6},
      {1, 0, 4, 4, 11, 20, 31, 64, 89, 160, 232, 356, 521, 712, 1001, 1272, 1635, 1952, 2263, 2528, 2660, 2760}};
  std::vector<Column> out;
  for (int g = 0; g <= 2; ++g) {
    out.push_back({"rank4 A", g, a[g], rank4_first(), {0, 1, 2}});
    out.push_back({"rank4 A", g, a[g], rank4_second(), {0, 2}});
    out.push_back({"rank4 B", g, b[g], rank4_first(), {3}});
    out.push_back({"rank4 B", g, b[g], rank4_second(), {1, 3}});
  }
  return out;
}

}  // namespace tables
