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
//
// Test-harness machinery for the one-parameter-family contraction check: build
// a coordinatized member of the family indexed by a four-block partition (four
// attachment points on a spine, legs carrying the multi-mark blocks), push it
// through the weighted reduction while tracking positions, and compare the
// resulting planar configurations by a projective canonical form. The family
// is contracted by the quotient map exactly when distinct members land on the
// same configuration.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conicstab/generate.hpp"
#include "conicstab/polytope.hpp"
#include "conicstab/projective.hpp"
#include "conicstab/rational.hpp"
#include "conicstab/trees.hpp"

namespace conicstab::testing {

// A reduced-conic configuration with explicit coordinates: either marks on a
// single projective line (a nonsingular conic seen through its
// parametrization) or marks on two lines, each with a distinguished node
// position, plus marks sitting exactly at the node.
struct PlacedImage {
  bool nodal = false;
  std::vector<std::pair<int, P1Point>> a;  // (mark, position), branch one
  std::vector<std::pair<int, P1Point>> b;  // branch two (nodal only)
  P1Point node_a, node_b;                  // node position per branch (nodal only)
  std::vector<int> node_marks;             // marks mapped onto the node itself
};

namespace detail {

// Chart a branch so its encoding is invariant under the transformations that
// preserve the realization: for a nodal branch, Moebius maps fixing the node
// (anchor the first two distinct mark positions to 0 and 1 and the node to
// infinity); for a smooth line, all Moebius maps (anchor the first three
// distinct positions to 0, 1, infinity). Fewer distinct positions leave spare
// degrees of freedom, so membership alone determines the configuration and
// the encoding degrades to cluster labels.
inline void encode_branch(std::ostream& out, const std::vector<std::pair<int, P1Point>>& marks,
                          const P1Point* node) {
  std::vector<std::pair<int, P1Point>> sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  std::vector<P1Point> anchors;
  for (const auto& [mk, pos] : sorted) {
    (void)mk;
    if (node != nullptr && pos == *node)
      throw std::logic_error("encode_branch: a mark coincides with the node");
    bool seen = false;
    for (const auto& a : anchors) seen = seen || a == pos;
    if (!seen) anchors.push_back(pos);
    if (anchors.size() == 3) break;
  }
  std::size_t needed = node != nullptr ? 2 : 3;
  for (const auto& [mk, pos] : sorted) {
    out << ' ' << mk << '@';
    if (anchors.size() >= needed) {
      P1Point image = node != nullptr ? moebius_chart(pos, anchors[0], anchors[1], *node)
                                      : moebius_chart(pos, anchors[0], anchors[1], anchors[2]);
      out << image.str();
    } else {
      // Not enough distinct positions to exhaust the group: label by cluster.
      for (std::size_t k = 0; k < anchors.size(); ++k)
        if (pos == anchors[k]) out << 'c' << k;
    }
  }
}

inline std::string encode_nodal_once(const PlacedImage& img, bool swapped) {
  std::ostringstream out;
  out << "nodal branch1:";
  encode_branch(out, swapped ? img.b : img.a, swapped ? &img.node_b : &img.node_a);
  out << " branch2:";
  encode_branch(out, swapped ? img.a : img.b, swapped ? &img.node_a : &img.node_b);
  return out.str();
}

}  // namespace detail

// A projective-equivalence invariant of the placed configuration: two placed
// images get the same form exactly when a change of coordinates matches one
// to the other (mark for mark, allowing the two branches of a nodal image to
// swap).
inline std::string canonical_image_form(const PlacedImage& img) {
  if (!img.nodal) {
    std::ostringstream out;
    out << "smooth";
    detail::encode_branch(out, img.a, nullptr);
    return out.str();
  }
  std::string one = detail::encode_nodal_once(img, false);
  std::string two = detail::encode_nodal_once(img, true);
  std::string form = std::min(one, two);
  std::vector<int> at_node = img.node_marks;
  std::sort(at_node.begin(), at_node.end());
  std::ostringstream out;
  out << form << " node:";
  for (int mk : at_node) out << ' ' << mk;
  return out.str();
}

// Build the member of the four-block family at spine parameter lambda and push
// it through the weighted reduction, keeping coordinates. The spine carries the
// four attachment points 0, 1, lambda, infinity; a block of two or more marks
// rides a leg glued at its point, a singleton sits on the spine directly.
// Contracting a light leg drops its marks onto the attachment point; if the
// spine itself becomes too light it merges onto the unique surviving leg at
// that leg's gluing point. The surviving chain is then read off as a planar
// configuration the way the contraction morphism maps it: extremal components
// become the branches and everything between them falls into the node.
inline PlacedImage fcurve_member_image(const FCurvePartition& partition, const Linearization& lin,
                                       const Rational& lambda) {
  std::size_t n = conicstab::detail::validate_fcurve_partition(partition);
  if (lin.n() != n) throw std::invalid_argument("fcurve member: weight count mismatch");
  if (lambda == 0 || lambda == 1)
    throw std::invalid_argument("fcurve member: spine parameter must avoid 0 and 1");
  NormalizedLinearization nl = normalize(lin);
  conicstab::detail::require_low_interior(nl, "fcurve member");
  const std::vector<Rational>& c = nl.lin.c;

  std::array<P1Point, 4> slot{P1Point(0), P1Point(1), P1Point(lambda), P1Point::infinity()};
  std::array<Rational, 4> weight{};
  for (std::size_t i = 0; i < 4; ++i)
    for (int mk : partition.blocks[i]) weight[i] += c[static_cast<std::size_t>(mk - 1)];

  std::vector<std::size_t> survivors;  // legs that stay: two or more marks, weight above 1
  Rational spine_weight(0);
  for (std::size_t i = 0; i < 4; ++i) {
    if (partition.blocks[i].size() >= 2 && weight[i] > 1)
      survivors.push_back(i);
    else
      spine_weight += weight[i];
  }

  PlacedImage img;
  if (survivors.empty()) {
    // Everything lands on the spine; the image is the spine itself.
    for (std::size_t i = 0; i < 4; ++i)
      for (int mk : partition.blocks[i]) img.a.push_back({mk, slot[i]});
    return img;
  }
  if (survivors.size() == 1) {
    std::size_t leg = survivors[0];
    std::vector<std::pair<int, P1Point>> leg_marks;
    long t = 0;
    for (int mk : partition.blocks[leg]) leg_marks.push_back({mk, P1Point(t++)});
    if (spine_weight <= 1) {
      // The spine collapses onto the leg at the gluing point.
      img.a = std::move(leg_marks);
      for (std::size_t i = 0; i < 4; ++i) {
        if (i == leg) continue;
        for (int mk : partition.blocks[i]) img.a.push_back({mk, P1Point::infinity()});
      }
      return img;
    }
    img.nodal = true;
    img.node_a = slot[leg];
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == leg) continue;
      for (int mk : partition.blocks[i]) img.a.push_back({mk, slot[i]});
    }
    img.b = std::move(leg_marks);
    img.node_b = P1Point::infinity();
    return img;
  }
  if (survivors.size() == 2) {
    // Two heavy legs become the branches; the spine sits between them and is
    // squeezed into the node together with everything it carries.
    img.nodal = true;
    long t = 0;
    for (int mk : partition.blocks[survivors[0]]) img.a.push_back({mk, P1Point(t++)});
    img.node_a = P1Point::infinity();
    t = 0;
    for (int mk : partition.blocks[survivors[1]]) img.b.push_back({mk, P1Point(t++)});
    img.node_b = P1Point::infinity();
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == survivors[0] || i == survivors[1]) continue;
      for (int mk : partition.blocks[i])
        img.node_marks.push_back(mk);
    }
    std::sort(img.node_marks.begin(), img.node_marks.end());
    return img;
  }
  // Three or more blocks above weight 1 would need total weight above 3.
  throw std::logic_error("fcurve member: impossible weight distribution");
}

// The semantic contraction test: two members at distinct generic spine
// parameters land on the same configuration exactly when the family is
// contracted.
inline bool fcurve_members_agree(const FCurvePartition& partition, const Linearization& lin) {
  std::string one = canonical_image_form(fcurve_member_image(partition, lin, Rational(2)));
  std::string two = canonical_image_form(fcurve_member_image(partition, lin, Rational(3)));
  return one == two;
}

// A uniformly random partition of 1..n into four nonempty blocks (for the
// randomized agreement sweep).
inline FCurvePartition random_fcurve_partition(Rng& rng, std::size_t n) {
  if (n < 4) throw std::invalid_argument("random_fcurve_partition: need at least four marks");
  FCurvePartition p;
  p.blocks.assign(4, {});
  while (true) {
    for (auto& b : p.blocks) b.clear();
    for (std::size_t mk = 1; mk <= n; ++mk)
      p.blocks[static_cast<std::size_t>(rng.uniform(0, 3))].push_back(static_cast<int>(mk));
    bool ok = true;
    for (const auto& b : p.blocks) ok = ok && !b.empty();
    if (ok) return p;
  }
}

}  // namespace conicstab::testing
