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

#include "parabetti/partition.hpp"

#include <numeric>

#include "parabetti/errors.hpp"

namespace parabetti {

Partition::Partition(QuasiParabolicData data, std::vector<int> ranks, std::vector<Matrix> matrices)
    : data_(std::move(data)), ranks_(std::move(ranks)), matrices_(std::move(matrices)) {
  if (ranks_.empty()) throw InvalidData("partition of length 0");
  for (int n : ranks_)
    if (n <= 0) throw InvalidData("partition block of non-positive rank");
  if (std::accumulate(ranks_.begin(), ranks_.end(), 0) != data_.rank())
    throw InvalidData("partition ranks do not sum to n(R)");
  if (matrices_.size() != data_.num_points()) throw InvalidData("partition has the wrong number of points");
  const size_t r = ranks_.size();
  for (size_t p = 0; p < matrices_.size(); ++p) {
    const auto& mult = data_.point(p).multiplicities;
    const Matrix& m = matrices_[p];
    if (m.size() != mult.size()) throw InvalidData("partition matrix has the wrong number of rows");
    std::vector<int> col(r, 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != r) throw InvalidData("partition matrix has the wrong number of columns");
      int row = 0;
      for (size_t k = 0; k < r; ++k) {
        if (m[i][k] < 0) throw InvalidData("negative partition entry");
        row += m[i][k];
        col[k] += m[i][k];
      }
      if (row != mult[i]) throw InvalidData("partition row sum differs from the multiplicity");
    }
    for (size_t k = 0; k < r; ++k)
      if (col[k] != ranks_[k]) throw InvalidData("partition column sum differs from the block rank");
  }
}

QuasiParabolicData Partition::columns(int begin, int end) const {
  int n = 0;
  for (int k = begin; k < end; ++k) n += ranks_[k];
  Multiplicities l;
  for (const Matrix& m : matrices_) {
    std::vector<int> v;
    for (const auto& row : m) {
      int s = 0;
      for (int k = begin; k < end; ++k) s += row[k];
      v.push_back(s);
    }
    l.push_back(std::move(v));
  }
  return data_.restrict(l, n);
}

Partition Partition::sub_partition(int begin, int end) const {
  std::vector<Matrix> mats;
  for (const Matrix& m : matrices_) {
    Matrix s;
    for (const auto& row : m) s.emplace_back(row.begin() + begin, row.begin() + end);
    mats.push_back(std::move(s));
  }
  return Partition(columns(begin, end), std::vector<int>(ranks_.begin() + begin, ranks_.begin() + end),
                   std::move(mats));
}

QuasiParabolicData Partition::block(int k) const { return columns(k, k + 1); }
QuasiParabolicData Partition::prefix(int j) const { return columns(0, j); }
QuasiParabolicData Partition::suffix(int j) const { return columns(j, length()); }
Partition Partition::head(int j) const { return sub_partition(0, j); }
Partition Partition::tail(int j) const { return sub_partition(j, length()); }

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

namespace {

// Non-negative matrices with the given row and column sums, row-major
// lexicographic order.
std::vector<Partition::Matrix> matrices_with_margins(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<Partition::Matrix> out;
  const size_t nr = rows.size(), nc = cols.size();
  Partition::Matrix m(nr, std::vector<int>(nc, 0));
  std::vector<int> col_left = cols;
  std::function<void(size_t, size_t, int)> rec = [&](size_t i, size_t k, int row_left) {
    if (i == nr) {
      for (int c : col_left)
        if (c != 0) return;
      out.push_back(m);
      return;
    }
    if (k + 1 == nc) {
      if (row_left > col_left[k]) return;
      m[i][k] = row_left;
      col_left[k] -= row_left;
      rec(i + 1, 0, i + 1 < nr ? rows[i + 1] : 0);
      col_left[k] += row_left;
      m[i][k] = 0;
      return;
    }
    for (int x = 0; x <= std::min(row_left, col_left[k]); ++x) {
      m[i][k] = x;
      col_left[k] -= x;
      rec(i, k + 1, row_left - x);
      col_left[k] += x;
    }
    m[i][k] = 0;
  };
  rec(0, 0, nr ? rows[0] : 0);
  return out;
}

}  // namespace

void for_each_partition(const QuasiParabolicData& r, const std::function<void(const Partition&)>& f) {
  const size_t np = r.num_points();
  for (const auto& comp : compositions(r.rank())) {
    std::vector<std::vector<Partition::Matrix>> choices(np);
    bool possible = true;
    for (size_t p = 0; p < np && possible; ++p) {
      choices[p] = matrices_with_margins(r.point(p).multiplicities, comp);
      possible = !choices[p].empty();
    }
    if (!possible) continue;
    std::vector<Partition::Matrix> pick(np);
    std::function<void(size_t)> rec = [&](size_t p) {
      if (p == np) {
        f(Partition(r, comp, pick));
        return;
      }
      for (const auto& m : choices[p]) {
        pick[p] = m;
        rec(p + 1);
      }
    };
    rec(0);
  }
}

std::vector<Partition> enumerate_partitions(const QuasiParabolicData& r) {
  std::vector<Partition> out;
  for_each_partition(r, [&](const Partition& i) { out.push_back(i); });
  return out;
}

}  // namespace parabetti
