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
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conicstab/linearization.hpp"
#include "conicstab/polytope.hpp"
#include "conicstab/rational.hpp"
#include "conicstab/realize.hpp"
#include "conicstab/verdict.hpp"

namespace conicstab {

// One rational component of a marked tree. Each cluster is a set of marks
// coincident at one smooth point; distinct clusters sit at distinct points.
struct TreeComponent {
  std::vector<std::vector<int>> clusters;  // 1-based marks, disjoint, nonempty

  friend bool operator==(const TreeComponent& a, const TreeComponent& b) {
    return a.clusters == b.clusters;
  }
};

// A tree of rational components with all n marks placed at smooth points.
// Edges are unordered pairs of component indices (0-based).
struct MarkedTree {
  std::vector<TreeComponent> components;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const MarkedTree& a, const MarkedTree& b) {
    return a.components == b.components && a.edges == b.edges;
  }
};

namespace detail {

inline void sort_clusters(MarkedTree& tree) {
  for (auto& comp : tree.components) {
    for (auto& cl : comp.clusters) std::sort(cl.begin(), cl.end());
    std::sort(comp.clusters.begin(), comp.clusters.end());
  }
  for (auto& e : tree.edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(tree.edges.begin(), tree.edges.end());
}

}  // namespace detail

// Component degrees (node counts) from the edge list.
inline std::vector<std::size_t> tree_degrees(const MarkedTree& tree) {
  std::vector<std::size_t> deg(tree.components.size(), 0);
  for (const auto& e : tree.edges) {
    deg.at(e.first)++;
    deg.at(e.second)++;
  }
  return deg;
}

// Checks the tree structure and the mark placement; returns the mark count n.
// Marks must be exactly 1..n, each in one cluster of one component.
inline std::size_t validate_tree(const MarkedTree& tree) {
  std::size_t m = tree.components.size();
  if (m == 0) throw std::invalid_argument("MarkedTree: needs at least one component");
  if (tree.edges.size() != m - 1)
    throw std::invalid_argument("MarkedTree: a tree on " + std::to_string(m) +
                                " components needs exactly " + std::to_string(m - 1) + " edges");
  std::set<std::pair<std::size_t, std::size_t>> seen_edges;
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& e : tree.edges) {
    if (e.first >= m || e.second >= m)
      throw std::invalid_argument("MarkedTree: edge endpoint out of range");
    if (e.first == e.second) throw std::invalid_argument("MarkedTree: self-loop edge");
    auto key = std::minmax(e.first, e.second);
    if (!seen_edges.insert({key.first, key.second}).second)
      throw std::invalid_argument("MarkedTree: duplicate edge");
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  // Connectivity: |E| = |V|-1 plus reaching every component makes it a tree.
  std::vector<bool> visited(m, false);
  std::vector<std::size_t> stack{0};
  visited[0] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!visited[w]) {
        visited[w] = true;
        stack.push_back(w);
      }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw std::invalid_argument("MarkedTree: components are not connected");

  std::set<int> marks;
  int max_mark = 0;
  for (const auto& comp : tree.components)
    for (const auto& cl : comp.clusters) {
      if (cl.empty()) throw std::invalid_argument("MarkedTree: empty cluster");
      for (int mk : cl) {
        if (mk < 1) throw std::invalid_argument("MarkedTree: marks are 1-based");
        if (!marks.insert(mk).second)
          throw std::invalid_argument("MarkedTree: mark " + std::to_string(mk) + " placed twice");
        max_mark = std::max(max_mark, mk);
      }
    }
  if (marks.empty()) throw std::invalid_argument("MarkedTree: no marks placed");
  if (static_cast<std::size_t>(max_mark) != marks.size())
    throw std::invalid_argument("MarkedTree: marks must be exactly 1..n with none missing");
  return marks.size();
}

inline bool is_chain(const MarkedTree& tree) {
  for (std::size_t d : tree_degrees(tree))
    if (d > 2) return false;
  return true;
}

namespace detail {

inline Rational cluster_weight(const std::vector<int>& cluster, const std::vector<Rational>& c) {
  Rational w(0);
  for (int mk : cluster) w += c[static_cast<std::size_t>(mk - 1)];
  return w;
}

inline Rational component_weight(const TreeComponent& comp, const std::vector<Rational>& c) {
  Rational w(0);
  for (const auto& cl : comp.clusters) w += cluster_weight(cl, c);
  return w;
}

inline void require_hassett_weights(const std::vector<Rational>& c, std::size_t n,
                                    const char* who) {
  if (c.size() != n)
    throw std::invalid_argument(std::string(who) + ": weight count does not match mark count");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] <= 0 || c[i] > 1)
      throw std::invalid_argument(std::string(who) + ": weight c_" + std::to_string(i + 1) +
                                  " must lie in (0, 1]");
}

// Indices of components violating the weighted stability inequality
// weight + degree > 2.
inline std::vector<std::size_t> violating_components(const MarkedTree& tree,
                                                     const std::vector<Rational>& c) {
  std::vector<std::size_t> deg = tree_degrees(tree);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < tree.components.size(); ++i)
    if (component_weight(tree.components[i], c) + Rational(static_cast<long>(deg[i])) <= 2)
      bad.push_back(i);
  return bad;
}

// Contract one violating component in place. Leaf components push all their
// marks, merged into a single cluster, onto the neighbor's attachment point;
// unmarked two-node components are spliced out, joining their neighbors.
inline void contract_component(MarkedTree& tree, std::size_t victim,
                               const std::vector<Rational>& c,
                               std::vector<std::string>* warnings) {
  std::vector<std::size_t> neighbors;
  for (const auto& e : tree.edges) {
    if (e.first == victim) neighbors.push_back(e.second);
    if (e.second == victim) neighbors.push_back(e.first);
  }
  Rational weight = component_weight(tree.components[victim], c);

  if (neighbors.empty())
    throw std::domain_error(
        "reduce: the last remaining component is unstable (total weight too small); no stable "
        "model exists for these weights");
  if (neighbors.size() == 1) {
    std::vector<int> merged;
    for (const auto& cl : tree.components[victim].clusters)
      merged.insert(merged.end(), cl.begin(), cl.end());
    std::sort(merged.begin(), merged.end());
    if (weight > 1)
      throw std::domain_error("reduce: contraction would create a cluster of weight above 1");
    if (!merged.empty()) {
      if (weight == 1 && warnings) {
        std::string marks;
        for (std::size_t i = 0; i < merged.size(); ++i)
          marks += (i ? "," : "") + std::to_string(merged[i]);
        warnings->push_back("contraction created a cluster of total weight exactly 1 (marks " +
                            marks + "): the linearization sits on a boundary wall");
      }
      tree.components[neighbors[0]].clusters.push_back(std::move(merged));
    }
  } else if (neighbors.size() == 2) {
    // weight + 2 <= 2 forces weight 0: an unmarked bridge component.
    tree.edges.push_back({neighbors[0], neighbors[1]});
  } else {
    throw std::logic_error("reduce: a component of degree >= 3 can never be unstable");
  }

  // Drop the victim and its edges; reindex the survivors.
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  for (const auto& e : tree.edges) {
    if (e.first == victim || e.second == victim) continue;
    kept.push_back({e.first > victim ? e.first - 1 : e.first,
                    e.second > victim ? e.second - 1 : e.second});
  }
  tree.edges = std::move(kept);
  tree.components.erase(tree.components.begin() + static_cast<std::ptrdiff_t>(victim));
}

}  // namespace detail

// Weighted stability of a marked tree: every component must satisfy
// weight + degree > 2 and no cluster may outweigh 1.
inline bool is_hassett_stable(const MarkedTree& tree, const std::vector<Rational>& c) {
  std::size_t n = validate_tree(tree);
  detail::require_hassett_weights(c, n, "is_hassett_stable");
  for (const auto& comp : tree.components)
    for (const auto& cl : comp.clusters)
      if (detail::cluster_weight(cl, c) > 1) return false;
  return detail::violating_components(tree, c).empty();
}

// Stability for the unit weights: at least three special points on every
// component and all marks at distinct points.
inline bool is_dm_stable(const MarkedTree& tree) {
  std::size_t n = validate_tree(tree);
  return is_hassett_stable(tree, std::vector<Rational>(n, Rational(1)));
}

// Contract every unstable component, repeating to a fixpoint. The result is
// stable for c; an input whose weights cannot stabilize (single unstable
// component, or an input cluster above weight 1) is rejected. Boundary
// phenomena (a merged cluster of weight exactly 1) are reported as warnings.
inline MarkedTree reduce(const MarkedTree& tree, const std::vector<Rational>& c,
                         std::vector<std::string>* warnings = nullptr) {
  std::size_t n = validate_tree(tree);
  detail::require_hassett_weights(c, n, "reduce");
  for (const auto& comp : tree.components)
    for (const auto& cl : comp.clusters)
      if (detail::cluster_weight(cl, c) > 1)
        throw std::domain_error("reduce: an input cluster already outweighs 1; no contraction "
                                "can stabilize it");
  MarkedTree out = tree;
  detail::sort_clusters(out);
  while (true) {
    std::vector<std::size_t> bad = detail::violating_components(out, c);
    if (bad.empty()) break;
    detail::contract_component(out, bad.front(), c, warnings);
  }
  detail::sort_clusters(out);
  return out;
}

// The planar image type of a chain: a smooth conic keeps its clusters; a
// genuine chain contracts to two lines, the extremal components surviving
// and every inner mark landing on the node.
enum class ConicImageKind { NonSingular, Nodal };

struct ConicImage {
  ConicImageKind kind = ConicImageKind::NonSingular;
  std::vector<std::vector<int>> clusters;        // NonSingular only
  std::vector<std::vector<int>> left;            // Nodal: clusters on the left line
  std::vector<std::vector<int>> right;           // Nodal: clusters on the right line
  std::vector<int> node;                         // Nodal: marks at the node

  friend bool operator==(const ConicImage& a, const ConicImage& b) {
    return a.kind == b.kind && a.clusters == b.clusters && a.left == b.left &&
           a.right == b.right && a.node == b.node;
  }
};

namespace detail {

inline int min_mark(const TreeComponent& comp) {
  int lo = 0;
  for (const auto& cl : comp.clusters)
    for (int mk : cl)
      if (lo == 0 || mk < lo) lo = mk;
  return lo;  // 0 only for an unmarked component
}

// The contraction image of a chain, with no stability validation. The left
// line is the extremal component holding the smallest extremal mark.
inline ConicImage conic_image_impl(const MarkedTree& chain) {
  ConicImage img;
  if (chain.components.size() == 1) {
    img.kind = ConicImageKind::NonSingular;
    img.clusters = chain.components[0].clusters;
    return img;
  }
  img.kind = ConicImageKind::Nodal;
  std::vector<std::size_t> deg = tree_degrees(chain);
  std::vector<std::size_t> ends;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == 1) ends.push_back(i);
  if (ends.size() != 2) throw std::invalid_argument("conic_image: input is not a chain");
  std::size_t a = ends[0], b = ends[1];
  int ma = min_mark(chain.components[a]);
  int mb = min_mark(chain.components[b]);
  if (mb != 0 && (ma == 0 || mb < ma)) std::swap(a, b);
  img.left = chain.components[a].clusters;
  img.right = chain.components[b].clusters;
  for (std::size_t i = 0; i < chain.components.size(); ++i) {
    if (i == a || i == b) continue;
    for (const auto& cl : chain.components[i].clusters)
      img.node.insert(img.node.end(), cl.begin(), cl.end());
  }
  std::sort(img.node.begin(), img.node.end());
  return img;
}

inline void require_low_interior(const NormalizedLinearization& nl, const char* who) {
  if (nl.regime != Regime::LowGamma || nl.lin.gamma <= 0 || nl.lin.gamma >= 1)
    throw std::domain_error(std::string(who) +
                            ": needs a linearization with 0 < gamma < 1 after normalization");
}

}  // namespace detail

inline Verdict image_is_git_stable(const ConicImage& img, const Linearization& lin);

// The planar contraction image of a stable chain. Boundary inputs — an
// equality in any inequality this decision evaluates, on the moduli side (a
// cluster of weight exactly 1) or the planar side (a strictly semistable
// image) — are rejected; nudge the linearization into a chamber first (see
// perturb).
inline ConicImage conic_image(const MarkedTree& chain, const Linearization& lin) {
  std::size_t n = validate_tree(chain);
  if (!is_chain(chain)) throw std::invalid_argument("conic_image: input is not a chain");
  if (lin.n() != n) throw std::invalid_argument("conic_image: weight count does not match marks");
  NormalizedLinearization nl = normalize(lin);
  detail::require_low_interior(nl, "conic_image");
  if (!is_hassett_stable(chain, nl.lin.c))
    throw std::domain_error("conic_image: the chain is not stable for these weights");
  for (const auto& comp : chain.components)
    for (const auto& cl : comp.clusters)
      if (detail::cluster_weight(cl, nl.lin.c) == 1)
        throw std::domain_error(
            "conic_image: a cluster has weight exactly 1 (wall); perturb the linearization");
  MarkedTree sorted = chain;
  detail::sort_clusters(sorted);
  ConicImage img = detail::conic_image_impl(sorted);
  if (image_is_git_stable(img, nl.lin) == Verdict::StrictlySemistable)
    throw std::domain_error(
        "conic_image: the image sits on a stability boundary (wall); perturb the linearization");
  return img;
}

// The stability verdict of an image from its cluster weights alone, for a
// linearization on the section gamma + c = 3: every smooth cluster against
// 1, and for a nodal image the node weight against c - 2 and each line's
// away-from-node weight against 1 (from below).
inline Verdict image_is_git_stable(const ConicImage& img, const Linearization& lin) {
  NormalizedLinearization nl = normalize(lin);
  if (nl.regime == Regime::HighGamma)
    throw std::domain_error(
        "image_is_git_stable: the image criteria apply below the threshold gamma = c/2");
  const std::vector<Rational>& c = nl.lin.c;
  Rational total = nl.lin.total_point_weight();

  bool tight = false;
  auto check_upper = [&](const Rational& value, const Rational& cap) -> bool {
    if (value > cap) return false;
    if (value == cap) tight = true;
    return true;
  };

  auto clusters_ok = [&](const std::vector<std::vector<int>>& clusters) -> bool {
    for (const auto& cl : clusters)
      if (!check_upper(detail::cluster_weight(cl, c), Rational(1))) return false;
    return true;
  };

  if (img.kind == ConicImageKind::NonSingular) {
    if (!clusters_ok(img.clusters)) return Verdict::Unstable;
    return tight ? Verdict::StrictlySemistable : Verdict::Stable;
  }

  if (!clusters_ok(img.left) || !clusters_ok(img.right)) return Verdict::Unstable;
  if (!check_upper(detail::cluster_weight(img.node, c), total - 2)) return Verdict::Unstable;
  for (const auto* side : {&img.left, &img.right}) {
    Rational away(0);
    for (const auto& cl : *side) away += detail::cluster_weight(cl, c);
    if (away < 1) return Verdict::Unstable;
    if (away == 1) tight = true;
  }
  return tight ? Verdict::StrictlySemistable : Verdict::Stable;
}

// A four-block partition of the marks, defining a one-parameter family of
// stable curves (four legs around a moving spine).
struct FCurvePartition {
  std::vector<std::vector<int>> blocks;  // exactly four, disjoint, covering 1..n
};

namespace detail {

inline std::size_t validate_fcurve_partition(const FCurvePartition& p) {
  if (p.blocks.size() != 4)
    throw std::invalid_argument("FCurvePartition: exactly four blocks required");
  std::set<int> seen;
  int max_mark = 0;
  for (const auto& b : p.blocks) {
    if (b.empty()) throw std::invalid_argument("FCurvePartition: blocks must be nonempty");
    for (int mk : b) {
      if (mk < 1) throw std::invalid_argument("FCurvePartition: marks are 1-based");
      if (!seen.insert(mk).second)
        throw std::invalid_argument("FCurvePartition: mark " + std::to_string(mk) + " repeated");
      max_mark = std::max(max_mark, mk);
    }
  }
  if (static_cast<std::size_t>(max_mark) != seen.size())
    throw std::invalid_argument("FCurvePartition: blocks must partition 1..n exactly");
  return seen.size();
}

inline std::vector<Rational> sorted_block_weights(const FCurvePartition& p,
                                                  const std::vector<Rational>& c) {
  std::vector<Rational> x;
  for (const auto& b : p.blocks) x.push_back(cluster_weight(b, c));
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace detail

// Whether the family collapses to a single point in the planar quotient:
// with block weights sorted ascending, x1 + x2 + x3 <= 1 or x3 > 1.
inline bool fcurve_contracted(const FCurvePartition& p, const Linearization& lin) {
  std::size_t n = detail::validate_fcurve_partition(p);
  if (lin.n() != n)
    throw std::invalid_argument("fcurve_contracted: weight count does not match marks");
  NormalizedLinearization nl = normalize(lin);
  detail::require_low_interior(nl, "fcurve_contracted");
  if (!is_effective(nl))
    throw std::domain_error("fcurve_contracted: the normalized weights are not effective");
  std::vector<Rational> x = detail::sorted_block_weights(p, nl.lin.c);
  return x[0] + x[1] + x[2] <= 1 || x[2] > 1;
}

// The part of the contraction already performed on the moduli side:
// x1 + x2 + x3 <= 1 alone.
inline bool fcurve_hassett_contracted(const FCurvePartition& p, const std::vector<Rational>& c) {
  std::size_t n = detail::validate_fcurve_partition(p);
  detail::require_hassett_weights(c, n, "fcurve_hassett_contracted");
  std::vector<Rational> x = detail::sorted_block_weights(p, c);
  return x[0] + x[1] + x[2] <= 1;
}

// Deterministic planar realization of an image: smooth images go to the
// standard parametrized conic with one parameter per cluster; nodal images
// go to the two coordinate lines with the node marks at the node.
inline PointedConic realize_image(const ConicImage& img, std::size_t n) {
  if (img.kind == ConicImageKind::NonSingular) {
    // one parameter per cluster, consecutive integers
    std::vector<P1Point> per_mark(n, P1Point(0));
    long t = 0;
    for (const auto& cl : img.clusters) {
      for (int mk : cl) per_mark[static_cast<std::size_t>(mk - 1)] = P1Point(t);
      ++t;
    }
    return realize_smooth(per_mark);
  }
  std::vector<SplitPlacement> placement(n);
  long t = 0;
  for (const auto& cl : img.left) {
    for (int mk : cl) placement[static_cast<std::size_t>(mk - 1)] = {false, SplitSide::Left, P1Point(t)};
    ++t;
  }
  t = 0;
  for (const auto& cl : img.right) {
    for (int mk : cl)
      placement[static_cast<std::size_t>(mk - 1)] = {false, SplitSide::Right, P1Point(t)};
    ++t;
  }
  for (int mk : img.node) placement[static_cast<std::size_t>(mk - 1)] = {true, SplitSide::Left, P1Point(0)};
  return realize_split(placement);
}

// The full contraction pipeline: reduce a unit-weight-stable tree for the
// normalized weights, contract the resulting chain to its planar image, and
// read off the stability verdict. Wall linearizations are processed but
// flagged, since their verdicts sit on chamber boundaries.
struct PipelineResult {
  NormalizedLinearization normalized;
  MarkedTree reduced;
  ConicImage image;
  Verdict verdict = Verdict::Stable;
  bool on_wall = false;
  std::vector<std::string> warnings;
};

inline PipelineResult semistable_reduction_pipeline(const MarkedTree& tree,
                                                    const Linearization& lin) {
  std::size_t n = validate_tree(tree);
  if (!is_dm_stable(tree))
    throw std::invalid_argument(
        "pipeline: the input tree is not stable for unit weights (some component has fewer than "
        "three special points or marks collide)");
  if (lin.n() != n) throw std::invalid_argument("pipeline: weight count does not match marks");

  NormalizedLinearization nl = normalize(lin);
  detail::require_low_interior(nl, "pipeline");

  PipelineResult result{nl, {}, {}, Verdict::Stable, false, {}};
  result.on_wall = !walls_at(nl).empty();
  if (result.on_wall)
    result.warnings.push_back(
        "the linearization lies on chamber walls: boundary verdicts (strict semistability) are "
        "possible; consider perturbing into an open chamber");

  result.reduced = reduce(tree, nl.lin.c, &result.warnings);
  if (!is_chain(result.reduced))
    throw std::logic_error("pipeline: reduction did not produce a chain");
  result.image = detail::conic_image_impl(result.reduced);
  result.verdict = image_is_git_stable(result.image, nl.lin);
  return result;
}

}  // namespace conicstab
