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
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "conicstab/linearization.hpp"
#include "conicstab/polytope.hpp"
#include "conicstab/realize.hpp"
#include "conicstab/trees.hpp"

namespace conicstab {

// Deterministic sample source: mt19937_64 is pinned by the standard, so the
// same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long uniform(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(long num, long den) { return uniform(1, den) <= num; }

  Rational small_rational(long max_num, long max_den) {
    return Rational(uniform(-max_num, max_num), uniform(1, max_den));
  }

  Rational positive_rational(long max_num, long max_den) {
    return Rational(uniform(1, max_num), uniform(1, max_den));
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    if (v.empty()) throw std::invalid_argument("Rng::pick: empty");
    return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

inline Mat3 random_projectivity(Rng& rng) {
  for (;;) {
    Mat3 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g.row[i][j] = rng.uniform(-4, 4);
    if (det(g) != 0) return g;
  }
}

// Parameter pool with forced collisions: roughly a third of draws reuse an
// earlier parameter.
inline P1Point draw_param(Rng& rng, std::vector<P1Point>& pool, bool allow_infinity) {
  if (!pool.empty() && rng.chance(1, 3)) return rng.pick(pool);
  P1Point t = allow_infinity && rng.chance(1, 10)
                  ? P1Point::infinity()
                  : P1Point(Integer(rng.uniform(-9, 9)), Integer(rng.uniform(1, 9)));
  pool.push_back(t);
  return t;
}

// Marked smooth conic: random parameters (with collisions) on the standard
// model, pushed through a random projectivity.
inline PointedConic random_smooth_config(Rng& rng, std::size_t n) {
  std::vector<P1Point> pool;
  std::vector<P1Point> params;
  params.reserve(n);
  for (std::size_t i = 0; i < n; ++i) params.push_back(draw_param(rng, pool, true));
  return apply_motion(realize_smooth(params), random_projectivity(rng));
}

// Marked split conic: marks fall on either line or the node, with collisions,
// pushed through a random projectivity.
inline PointedConic random_split_config(Rng& rng, std::size_t n) {
  std::vector<P1Point> pool_left, pool_right;
  std::vector<SplitPlacement> placement(n);
  for (auto& pl : placement) {
    long roll = rng.uniform(0, 9);
    if (roll < 2) {
      pl.at_node = true;
    } else if (roll < 6) {
      pl.side = SplitSide::Left;
      pl.t = draw_param(rng, pool_left, false);
    } else {
      pl.side = SplitSide::Right;
      pl.t = draw_param(rng, pool_right, false);
    }
  }
  return apply_motion(realize_split(placement), random_projectivity(rng));
}

inline PointedConic random_double_line_config(Rng& rng, std::size_t n) {
  ProjLine l(Vec3{Integer(rng.uniform(-3, 3)), Integer(rng.uniform(-3, 3)),
                  Integer(rng.uniform(1, 3))});
  std::vector<P1Point> pool;
  std::vector<P1Point> params;
  params.reserve(n);
  for (std::size_t i = 0; i < n; ++i) params.push_back(draw_param(rng, pool, true));
  return apply_motion(realize_double_line(l, params), random_projectivity(rng));
}

// A chamber-interior effective linearization on the section gamma + c = 3
// with 0 < gamma < 1: resamples until no subset sum sits on a wall and no
// single weight exceeds 1.
inline Linearization random_interior_linearization(Rng& rng, std::size_t n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Rational gamma(rng.uniform(1, 19), 20);
    std::vector<Rational> c;
    Rational total(0);
    for (std::size_t i = 0; i < n; ++i) {
      c.push_back(rng.positive_rational(9, 9));
      total += c.back();
    }
    for (auto& w : c) w *= (Rational(3) - gamma) / total;
    NormalizedLinearization nl = normalize(Linearization(gamma, c));
    if (is_effective(nl) && walls_at(nl).empty()) return nl.lin;
  }
  throw std::runtime_error("random_interior_linearization: sampling failed");
}

// A linearization sitting exactly on a level-1 wall: the weights of a chosen
// subset sum to 1 on the normalized section, everything else generic. Also
// reports the subset, whose collision realizes the boundary configuration.
inline Linearization random_level1_wall_linearization(Rng& rng, std::size_t n,
                                                      std::vector<int>* subset_out = nullptr) {
  if (n < 3) throw std::invalid_argument("random_level1_wall_linearization: need n >= 3");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Choose a proper subset of size 2..n-1 (singletons would need weight 1).
    std::size_t k = static_cast<std::size_t>(rng.uniform(2, static_cast<long>(n) - 1));
    std::vector<int> marks(n);
    for (std::size_t i = 0; i < n; ++i) marks[i] = static_cast<int>(i) + 1;
    for (std::size_t i = n; i > 1; --i)
      std::swap(marks[i - 1], marks[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
    std::vector<int> subset(marks.begin(), marks.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(subset.begin(), subset.end());

    Rational gamma(rng.uniform(1, 19), 20);
    std::vector<Rational> c(n, Rational(0));
    Rational in_total(0), out_total(0);
    std::vector<Rational> draw(n);
    for (std::size_t i = 0; i < n; ++i) draw[i] = rng.positive_rational(9, 9);
    std::vector<bool> inside(n, false);
    for (int mk : subset) inside[static_cast<std::size_t>(mk - 1)] = true;
    for (std::size_t i = 0; i < n; ++i) (inside[i] ? in_total : out_total) += draw[i];
    // Scale the subset to total exactly 1 and the rest to 2 - gamma.
    for (std::size_t i = 0; i < n; ++i)
      c[i] = inside[i] ? draw[i] / in_total : draw[i] * (Rational(2) - gamma) / out_total;
    NormalizedLinearization nl = normalize(Linearization(gamma, c));
    if (!is_effective(nl)) continue;
    if (subset_out) *subset_out = subset;
    return nl.lin;
  }
  throw std::runtime_error("random_level1_wall_linearization: sampling failed");
}

// A random tree of rational components, all marks at distinct points and
// every component carrying at least three special points.
inline MarkedTree random_dm_tree(Rng& rng, std::size_t n) {
  if (n < 3) throw std::invalid_argument("random_dm_tree: need n >= 3");
  std::size_t max_comps = std::max<std::size_t>(1, n - 2);
  for (int attempt = 0;; ++attempt) {
    std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, static_cast<long>(
                                                                    std::min<std::size_t>(max_comps, 4) - 1)));
    MarkedTree tree;
    tree.components.resize(m);
    for (std::size_t i = 1; i < m; ++i)
      tree.edges.push_back({static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1)), i});

    std::vector<std::size_t> deg = tree_degrees(tree);
    std::vector<std::size_t> quota(m);
    std::size_t required = 0;
    for (std::size_t i = 0; i < m; ++i) {
      quota[i] = deg[i] >= 3 ? 0 : 3 - deg[i];
      required += quota[i];
    }
    if (required > n) {
      if (attempt > 200) throw std::runtime_error("random_dm_tree: sampling failed");
      continue;
    }
    for (std::size_t extra = n - required; extra > 0; --extra)
      quota[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m) - 1))]++;

    std::vector<int> marks(n);
    for (std::size_t i = 0; i < n; ++i) marks[i] = static_cast<int>(i) + 1;
    for (std::size_t i = n; i > 1; --i)
      std::swap(marks[i - 1], marks[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
    std::size_t next = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < quota[i]; ++k)
        tree.components[i].clusters.push_back({marks[next++]});
    detail::sort_clusters(tree);
    return tree;
  }
}

}  // namespace conicstab
