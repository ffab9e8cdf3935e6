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

#include <stdexcept>
#include <vector>

#include "conicstab/projective.hpp"

namespace conicstab {

// Standard models: the smooth conic y^2 - xz carries the parametrization
// t -> (1 : t : t^2); the split conic xy has components {x = 0} and {y = 0}
// meeting at the node (0:0:1).
inline ConicForm smooth_model_form() { return ConicForm(0, 0, -1, 1, 0, 0); }
inline ConicForm split_model_form() { return ConicForm(0, 1, 0, 0, 0, 0); }

inline ProjPoint smooth_model_point(const P1Point& t) {
  return ProjPoint(Vec3{t.v * t.v, t.u * t.v, t.u * t.u});
}

inline ProjPoint split_model_node() { return ProjPoint(0, 0, 1); }

enum class SplitSide { Left, Right };

// Points of the split model: Left is {x = 0} with chart t -> (0 : 1 : t),
// Right is {y = 0} with t -> (1 : 0 : t); t = infinity is the node on both.
inline ProjPoint split_model_point(SplitSide side, const P1Point& t) {
  if (t.is_infinity())
    throw std::invalid_argument("split_model_point: infinity is the node, not a smooth point");
  return side == SplitSide::Left ? ProjPoint(Vec3{Integer(0), t.v, t.u})
                                 : ProjPoint(Vec3{t.v, Integer(0), t.u});
}

inline PointedConic realize_smooth(const std::vector<P1Point>& params) {
  std::vector<ProjPoint> pts;
  pts.reserve(params.size());
  for (const auto& t : params) pts.push_back(smooth_model_point(t));
  return PointedConic(smooth_model_form(), std::move(pts));
}

struct SplitPlacement {
  bool at_node = false;
  SplitSide side = SplitSide::Left;  // ignored when at_node
  P1Point t;                         // ignored when at_node
};

inline PointedConic realize_split(const std::vector<SplitPlacement>& placement) {
  std::vector<ProjPoint> pts;
  pts.reserve(placement.size());
  for (const auto& pl : placement)
    pts.push_back(pl.at_node ? split_model_node() : split_model_point(pl.side, pl.t));
  return PointedConic(split_model_form(), std::move(pts));
}

inline PointedConic realize_double_line(const ProjLine& l, const std::vector<P1Point>& params) {
  // The square of the line. (alpha x + beta y + delta z)^2.
  const Vec3& v = l.v;
  ConicForm sq(std::array<Integer, 6>{v[0] * v[0], 2 * v[0] * v[1], 2 * v[0] * v[2], v[1] * v[1],
                                      2 * v[1] * v[2], v[2] * v[2]});
  auto [w0, w1] = line_span(l);
  std::vector<ProjPoint> pts;
  pts.reserve(params.size());
  for (const auto& t : params)
    pts.push_back(ProjPoint(Vec3{t.v * w0[0] + t.u * w1[0], t.v * w0[1] + t.u * w1[1],
                                 t.v * w0[2] + t.u * w1[2]}));
  return PointedConic(sq, std::move(pts));
}

}  // namespace conicstab
