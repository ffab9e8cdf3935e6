// Copyright 2026 The conicstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "conicstab/linearization.hpp"
#include "conicstab/projective.hpp"
#include "conicstab/weights.hpp"

namespace conicstab {

// The numerical weight of a (config, frame) pair splits as a sum over one
// factor per geometric object: the conic contributes the minimum weight over
// its nonzero coefficients, each marked point the minimum over its nonzero
// coordinates. Each factor is a lower envelope of the lines below.
struct WeightGroup {
  std::vector<LinF> lines;
};

struct WeightSystem {
  std::vector<WeightGroup> groups;

  Rational eval(const Rational& b) const {
    Rational total(0);
    for (const auto& g : groups) {
      Rational best = g.lines.front().eval(b);
      for (std::size_t i = 1; i < g.lines.size(); ++i) {
        Rational v = g.lines[i].eval(b);
        if (v < best) best = std::move(v);
      }
      total += best;
    }
    return total;
  }
};

// Builds the weight system of the configuration expressed in the coordinates
// of `frame` (columns are the basis e1, e2, e3). The subgroup acts with
// exponents (b, -1-b, 1) on those coordinates.
inline WeightSystem weight_system(const PointedConic& config, const Linearization& lin,
                                  const Mat3& frame) {
  if (lin.n() != config.n())
    throw std::invalid_argument("weight_system: linearization has " + std::to_string(lin.n()) +
                                " weights for " + std::to_string(config.n()) + " points");
  lin.require_in_cone();
  if (det(frame) == 0) throw std::invalid_argument("weight_system: frame is not a basis");

  WeightSystem ws;
  ws.groups.reserve(1 + config.n());

  // Conic factor: coefficients of the form rewritten in frame coordinates.
  Mat3 gram = mat_mul(transpose(frame), mat_mul(config.form.doubled_matrix(), frame));
  ConicForm moved = form_from_doubled_matrix(gram);
  WeightGroup conic_group;
  for (int m = 0; m < 6; ++m) {
    if (moved.a[m] == 0) continue;
    LinF w = monomial_weight(m);
    conic_group.lines.push_back({lin.gamma * w.slope, lin.gamma * w.intercept});
  }
  ws.groups.push_back(std::move(conic_group));

  // Point factors: coordinates of each mark in the frame basis.
  Mat3 inv = adjugate(frame);
  for (std::size_t l = 0; l < config.n(); ++l) {
    Vec3 p = mat_vec(inv, config.points[l].v);
    WeightGroup g;
    for (int axis = 0; axis < 3; ++axis)
      if (p[axis] != 0) g.lines.push_back(coordinate_weight(axis, lin.c[l]));
    ws.groups.push_back(std::move(g));
  }
  return ws;
}

// Candidate kink locations: the interval ends plus every pairwise
// intersection of two lines in one group that falls inside the interval.
// The envelope sum is linear between consecutive candidates.
inline std::vector<Rational> kink_candidates(const WeightSystem& ws) {
  std::vector<Rational> bs{b_interval_lo(), b_interval_hi()};
  for (const auto& g : ws.groups)
    for (std::size_t i = 0; i < g.lines.size(); ++i)
      for (std::size_t j = i + 1; j < g.lines.size(); ++j) {
        const LinF &f = g.lines[i], &h = g.lines[j];
        if (f.slope == h.slope) continue;
        Rational b = (h.intercept - f.intercept) / (f.slope - h.slope);
        if (b > b_interval_lo() && b < b_interval_hi()) bs.push_back(std::move(b));
      }
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  return bs;
}

// Maximum of the concave piecewise-linear weight over the b interval,
// with the leftmost maximizer. Exact.
inline std::pair<Rational, Rational> mu_max(const WeightSystem& ws) {
  Rational best, arg;
  bool first = true;
  for (const auto& b : kink_candidates(ws)) {
    Rational v = ws.eval(b);
    if (first || v > best) {
      best = std::move(v);
      arg = b;
      first = false;
    }
  }
  return {best, arg};
}

struct MuPiece {
  Rational lo, hi;
  LinF f;
};

struct MuProfile {
  std::vector<MuPiece> pieces;  // cover [-2, -1/2], collinear neighbours merged
  Rational maximum;
  Rational argmax;  // leftmost maximizer

  Rational eval(const Rational& b) const {
    for (const auto& p : pieces)
      if (b >= p.lo && b <= p.hi) return p.f.eval(b);
    throw std::domain_error("MuProfile: b outside [-2, -1/2]");
  }
};

inline MuProfile mu_profile_of(const WeightSystem& ws) {
  std::vector<Rational> bs = kink_candidates(ws);
  MuProfile prof;
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    Rational va = ws.eval(bs[i]), vb = ws.eval(bs[i + 1]);
    LinF f;
    f.slope = (vb - va) / (bs[i + 1] - bs[i]);
    f.intercept = va - f.slope * bs[i];
    if (!prof.pieces.empty() && prof.pieces.back().f == f)
      prof.pieces.back().hi = bs[i + 1];
    else
      prof.pieces.push_back({bs[i], bs[i + 1], std::move(f)});
  }
  auto [mx, arg] = mu_max(ws);
  prof.maximum = std::move(mx);
  prof.argmax = std::move(arg);
  return prof;
}

inline MuProfile mu_profile(const PointedConic& config, const Linearization& lin, const Mat3& frame) {
  return mu_profile_of(weight_system(config, lin, frame));
}

}  // namespace conicstab
