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

#include "parabetti/parabolic_data.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "parabetti/errors.hpp"

namespace parabetti {

int ParabolicPoint::rank() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

QuasiParabolicData::QuasiParabolicData(std::vector<ParabolicPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidData("quasi-parabolic data needs at least one point (use without_points)");
  for (size_t p = 0; p < points_.size(); ++p) {
    const auto& pt = points_[p];
    const std::string where = "point " + std::to_string(p);
    if (pt.multiplicities.empty()) throw InvalidData(where + ": empty flag type");
    if (pt.multiplicities.size() != pt.weights.size())
      throw InvalidData(where + ": " + std::to_string(pt.multiplicities.size()) + " multiplicities but " +
                        std::to_string(pt.weights.size()) + " weights");
    for (int m : pt.multiplicities)
      if (m < 0) throw InvalidData(where + ": negative multiplicity");
    for (size_t i = 0; i < pt.weights.size(); ++i) {
      if (pt.weights[i] < 0 || pt.weights[i] >= 1) throw InvalidData(where + ": weight outside [0,1)");
      if (i > 0 && pt.weights[i] <= pt.weights[i - 1])
        throw InvalidData(where + ": weights must be strictly increasing");
    }
    if (p == 0)
      rank_ = pt.rank();
    else if (pt.rank() != rank_)
      throw InvalidData(where + ": multiplicities sum to " + std::to_string(pt.rank()) + ", expected " +
                        std::to_string(rank_));
  }
  if (rank_ <= 0) throw InvalidData("rank must be positive");
}

QuasiParabolicData QuasiParabolicData::without_points(int rank) {
  if (rank <= 0) throw InvalidData("rank must be positive");
  QuasiParabolicData r;
  r.rank_ = rank;
  return r;
}

Multiplicities QuasiParabolicData::multiplicities() const {
  Multiplicities m;
  for (const auto& pt : points_) m.push_back(pt.multiplicities);
  return m;
}

Rational QuasiParabolicData::alpha() const {
  Rational a = 0;
  for (const auto& pt : points_)
    for (size_t i = 0; i < pt.length(); ++i) a += pt.multiplicities[i] * pt.weights[i];
  return a;
}

QuasiParabolicData QuasiParabolicData::restrict(const Multiplicities& l, int rank) const {
  if (l.size() != points_.size()) throw InvalidData("sub-data has the wrong number of points");
  if (points_.empty()) return without_points(rank);
  std::vector<ParabolicPoint> pts = points_;
  for (size_t p = 0; p < pts.size(); ++p) {
    if (l[p].size() != pts[p].length()) throw InvalidData("sub-data has the wrong flag length");
    pts[p].multiplicities = l[p];
  }
  QuasiParabolicData out(std::move(pts));
  if (out.rank() != rank) throw InvalidData("sub-data rank mismatch");
  return out;
}

std::string QuasiParabolicData::key() const {
  std::ostringstream os;
  os << rank_;
  for (const auto& pt : points_) {
    os << "|";
    for (size_t i = 0; i < pt.length(); ++i) os << pt.multiplicities[i] << "@" << pt.weights[i] << ",";
  }
  return os.str();
}

QuasiParabolicData normalize_seshadri(const QuasiParabolicData& r) {
  if (r.num_points() == 0) return r;
  std::vector<ParabolicPoint> pts;
  for (const auto& pt : r.points()) {
    ParabolicPoint q;
    for (size_t i = 0; i < pt.length(); ++i) {
      if (pt.multiplicities[i] == 0) continue;
      q.multiplicities.push_back(pt.multiplicities[i]);
      q.weights.push_back(pt.weights[i]);
    }
    pts.push_back(std::move(q));
  }
  return QuasiParabolicData(std::move(pts));
}

QuasiParabolicData embed_seshadri(const QuasiParabolicData& reduced,
                                  const std::vector<std::vector<Rational>>& ambient_weights) {
  if (ambient_weights.size() != reduced.num_points()) throw InvalidData("ambient weights: wrong number of points");
  if (reduced.num_points() == 0) return reduced;
  std::vector<ParabolicPoint> pts;
  for (size_t p = 0; p < ambient_weights.size(); ++p) {
    const auto& src = reduced.point(p);
    ParabolicPoint q;
    q.weights = ambient_weights[p];
    q.multiplicities.assign(q.weights.size(), 0);
    for (size_t i = 0; i < src.length(); ++i) {
      size_t j = 0;
      while (j < q.weights.size() && q.weights[j] != src.weights[i]) ++j;
      if (j == q.weights.size()) throw InvalidData("weight " + to_string(src.weights[i]) + " missing from ambient family");
      q.multiplicities[j] = src.multiplicities[i];
    }
    pts.push_back(std::move(q));
  }
  return QuasiParabolicData(std::move(pts));
}

namespace {

// All vectors v with 0 <= v_i <= bound_i and sum s, lexicographically.
void bounded_vectors(const std::vector<int>& bound, int s, std::vector<std::vector<int>>& out) {
  std::vector<int> v(bound.size());
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i + 1 == bound.size()) {
      if (left <= bound[i]) {
        v[i] = left;
        out.push_back(v);
      }
      return;
    }
    for (int x = 0; x <= std::min(left, bound[i]); ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (!bound.empty()) rec(0, s);
}

}  // namespace

std::vector<QuasiParabolicData> enumerate_subdata(const QuasiParabolicData& r) {
  std::vector<QuasiParabolicData> out;
  const size_t np = r.num_points();
  for (int s = 1; s < r.rank(); ++s) {
    if (np == 0) {
      out.push_back(QuasiParabolicData::without_points(s));
      continue;
    }
    std::vector<std::vector<std::vector<int>>> choices(np);
    for (size_t p = 0; p < np; ++p) bounded_vectors(r.point(p).multiplicities, s, choices[p]);
    Multiplicities l(np);
    std::function<void(size_t)> rec = [&](size_t p) {
      if (p == np) {
        out.push_back(r.restrict(l, s));
        return;
      }
      for (const auto& v : choices[p]) {
        l[p] = v;
        rec(p + 1);
      }
    };
    rec(0);
  }
  return out;
}

Rational parabolic_slope(const Instance& inst) {
  return (Rational(inst.degree) + inst.data.alpha()) / inst.data.rank();
}

std::optional<SlopeCoincidence> find_slope_coincidence(const Instance& inst) {
  const Rational mu = parabolic_slope(inst);
  for (auto& l : enumerate_subdata(inst.data)) {
    Rational e = l.rank() * mu - l.alpha();
    if (is_integer(e)) return SlopeCoincidence{std::move(l), e.get_num()};
  }
  return std::nullopt;
}

bool ss_equals_stable(const Instance& inst) { return !find_slope_coincidence(inst).has_value(); }

}  // namespace parabetti
