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
#include <set>
#include <vector>

#include "conicstab/projective.hpp"

namespace conicstab {

inline std::vector<ProjPoint> distinct_mark_locations(const PointedConic& config) {
  std::vector<ProjPoint> out;
  for (const auto& p : config.points)
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

namespace detail {

inline bool contains(const std::vector<ProjPoint>& v, const ProjPoint& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

// First point on l, in the deterministic sequence w0, w1, w0+w1, w0+2*w1, ...,
// that avoids every excluded point.
inline ProjPoint generic_point_on(const ProjLine& l, const std::vector<ProjPoint>& excluded) {
  auto [w0, w1] = line_span(l);
  std::vector<ProjPoint> candidates{ProjPoint(w0), ProjPoint(w1)};
  for (long k = 1;; ++k) {
    for (const auto& q : candidates)
      if (!contains(excluded, q)) return q;
    candidates = {ProjPoint(Vec3{w0[0] + k * w1[0], w0[1] + k * w1[1], w0[2] + k * w1[2]})};
  }
}

// First point off l avoiding the excluded points, from a fixed sequence that
// no line can exhaust.
inline ProjPoint generic_point_off(const ProjLine& l, const std::vector<ProjPoint>& excluded) {
  auto try_point = [&](ProjPoint q) -> bool { return !incident(l, q) && !contains(excluded, q); };
  for (ProjPoint q : {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)})
    if (try_point(q)) return q;
  for (long k = 2;; ++k) {
    ProjPoint q(1, k, k * k);  // a line can meet this rational normal curve at most twice
    if (try_point(q)) return q;
  }
}

}  // namespace detail

// The adapted frame family of a configuration: bases (e1, e2, e3) built from
// its special points (marks and node). e3 runs over the special points; the
// line L = span(e2, e3) runs over conic components through e3, the tangent at
// e3 when e3 is a smooth point of the conic, and joins of e3 to other special
// points; e2 runs over special points on L plus one generic point of L; e1
// over special points off L plus one generic point off L. The identity frame
// is always included and exact duplicates are removed.
inline std::vector<Mat3> adapted_frames(const PointedConic& config) {
  const ConicForm& form = config.form;
  ConicClass cls = classify_conic(form);

  std::vector<ProjPoint> specials = distinct_mark_locations(config);
  if (cls.kind == ConicKind::Nodal && !detail::contains(specials, *cls.node))
    specials.push_back(*cls.node);

  std::set<std::array<Vec3, 3>> seen;
  std::vector<Mat3> frames;
  auto push = [&](const ProjPoint& e1, const ProjPoint& e2, const ProjPoint& e3) {
    if (seen.insert({e1.v, e2.v, e3.v}).second)
      frames.push_back(Mat3::from_columns(e1.v, e2.v, e3.v));
  };

  for (const auto& e3 : specials) {
    bool e3_is_node = cls.kind == ConicKind::Nodal && e3 == *cls.node;

    std::set<ProjLine> lines;
    if (cls.kind == ConicKind::Nodal) {
      if (e3_is_node) {
        // The components themselves pass through the node; without them the
        // family misses flags aligned with an unmarked line (or any line at
        // all when every mark sits on the node).
        if (auto comps = rational_component_lines(form, *cls.node)) {
          lines.insert(comps->first);
          lines.insert(comps->second);
        }
        for (const auto& q : specials)
          if (q != e3) lines.insert(join(*cls.node, q));
      } else {
        lines.insert(join(*cls.node, e3));
      }
    } else if (cls.kind == ConicKind::DoubleLine) {
      lines.insert(support_line(form));
    }
    if (cls.kind != ConicKind::DoubleLine && !e3_is_node) lines.insert(tangent_line(form, e3));
    for (const auto& s : specials)
      if (s != e3) lines.insert(join(e3, s));

    for (const auto& L : lines) {
      std::vector<ProjPoint> e2s;
      for (const auto& s : specials)
        if (s != e3 && incident(L, s)) e2s.push_back(s);
      {
        std::vector<ProjPoint> excluded = specials;
        if (!detail::contains(excluded, e3)) excluded.push_back(e3);
        e2s.push_back(detail::generic_point_on(L, excluded));
      }
      std::vector<ProjPoint> e1s;
      for (const auto& s : specials)
        if (!incident(L, s)) e1s.push_back(s);
      e1s.push_back(detail::generic_point_off(L, specials));

      for (const auto& e2 : e2s)
        for (const auto& e1 : e1s) push(e1, e2, e3);
    }
  }

  Mat3 id = Mat3::identity();
  if (seen.insert({id.column(0), id.column(1), id.column(2)}).second) frames.push_back(id);
  return frames;
}

}  // namespace conicstab
