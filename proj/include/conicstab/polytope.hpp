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
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "conicstab/linearization.hpp"
#include "conicstab/rational.hpp"

namespace conicstab {

// A linearization ray falls into one of two regimes depending on how the
// conic weight compares with half the total point weight. Below the
// threshold the node and component bounds can bind; above it every singular
// configuration is unstable and only the cluster bound c_I = c/2 matters.
enum class Regime { LowGamma, HighGamma };

inline std::string to_string(Regime r) {
  return r == Regime::LowGamma ? "LOW_GAMMA" : "HIGH_GAMMA";
}

struct NormalizedLinearization {
  Linearization lin;
  Regime regime;
  Rational scale;  // normalized = scale * input
};

namespace detail {

constexpr std::size_t kMaxSubsetMarks = 20;

inline void require_subset_range(std::size_t n, const char* who) {
  if (n > kMaxSubsetMarks)
    throw std::invalid_argument(std::string(who) + ": subset enumeration supports at most " +
                                std::to_string(kMaxSubsetMarks) + " marks");
}

// Subset sums of the point weights for every mask 0..2^n-1, built
// incrementally: sum(mask) = sum(mask without its lowest bit) + that weight.
inline std::vector<Rational> subset_sums(const std::vector<Rational>& c) {
  std::size_t n = c.size();
  std::vector<Rational> sums(std::size_t(1) << n, Rational(0));
  for (std::uint32_t mask = 1; mask < sums.size(); ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    int bit = std::countr_zero(mask);
    sums[mask] = sums[mask ^ low] + c[static_cast<std::size_t>(bit)];
  }
  return sums;
}

inline std::vector<int> marks_of_mask(std::uint32_t mask, std::size_t n) {
  std::vector<int> marks;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (std::uint32_t(1) << i)) marks.push_back(static_cast<int>(i) + 1);
  return marks;
}

// Normalized wall levels active in a regime. Level 1 walls exist everywhere;
// level 2 walls only below the threshold.
inline std::vector<Rational> wall_levels(Regime regime) {
  if (regime == Regime::LowGamma) return {Rational(1), Rational(2)};
  return {Rational(1)};
}

}  // namespace detail

// Scale a ray to its reference representative: gamma + total = 3 when
// gamma <= total/2 (LowGamma), total = 2 otherwise (HighGamma). The two
// rules agree on the threshold, which lands on (gamma, total) = (1, 2).
inline NormalizedLinearization normalize(const Linearization& raw) {
  raw.require_in_cone();
  Rational total = raw.total_point_weight();
  Regime regime = raw.gamma <= total / 2 ? Regime::LowGamma : Regime::HighGamma;
  Rational scale = regime == Regime::LowGamma ? Rational(3) / (total + raw.gamma)
                                              : Rational(2) / total;
  std::vector<Rational> c;
  c.reserve(raw.c.size());
  for (const auto& w : raw.c) c.push_back(w * scale);
  return NormalizedLinearization{Linearization(raw.gamma * scale, std::move(c)), regime, scale};
}

// A normalized linearization admits semistable configurations at all exactly
// when no single mark outweighs every bound, i.e. max c_i <= 1.
inline bool is_effective(const NormalizedLinearization& nl) {
  for (const auto& w : nl.lin.c)
    if (w > 1) return false;
  return true;
}

// A wall: a nonempty proper subset of the marks whose normalized total
// weight sits exactly at one of the critical levels.
struct Wall {
  std::uint32_t mask = 0;  // bit i set  <=>  mark i+1 in the subset
  std::vector<int> marks;  // 1-based, ascending
  Rational level;          // normalized critical level (1, or 2 in LowGamma)

  friend bool operator==(const Wall& a, const Wall& b) {
    return a.mask == b.mask && a.level == b.level;
  }
};

// All walls passing through a normalized linearization, sorted by
// (level, mask).  Strictly interior chamber points get an empty list.
inline std::vector<Wall> walls_at(const NormalizedLinearization& nl) {
  std::size_t n = nl.lin.n();
  detail::require_subset_range(n, "walls_at");
  std::vector<Rational> sums = detail::subset_sums(nl.lin.c);
  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  std::vector<Wall> walls;
  for (const Rational& level : detail::wall_levels(nl.regime))
    for (std::uint32_t mask = 1; mask < full; ++mask)
      if (sums[mask] == level) walls.push_back(Wall{mask, detail::marks_of_mask(mask, n), level});
  return walls;
}

// Which side of every wall locus a normalized linearization sits on. Entries
// follow the walls_at enumeration order: for each active level, all masks
// ascending; each entry is the sign of c_I - level.
struct ChamberSignature {
  Regime regime = Regime::LowGamma;
  std::size_t n = 0;
  std::vector<int> signs;

  bool on_wall() const {
    return std::any_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
  }

  friend bool operator==(const ChamberSignature& a, const ChamberSignature& b) {
    return a.regime == b.regime && a.n == b.n && a.signs == b.signs;
  }
  friend bool operator!=(const ChamberSignature& a, const ChamberSignature& b) { return !(a == b); }
};

inline ChamberSignature chamber_signature(const NormalizedLinearization& nl) {
  std::size_t n = nl.lin.n();
  detail::require_subset_range(n, "chamber_signature");
  std::vector<Rational> sums = detail::subset_sums(nl.lin.c);
  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  ChamberSignature sig;
  sig.regime = nl.regime;
  sig.n = n;
  for (const Rational& level : detail::wall_levels(nl.regime))
    for (std::uint32_t mask = 1; mask < full; ++mask)
      sig.signs.push_back(sign_of(sums[mask] - level));
  return sig;
}

// Two linearizations share an open chamber exactly when both avoid every
// wall and sit on the same side of each one (in the same regime).
inline bool same_chamber(const NormalizedLinearization& a, const NormalizedLinearization& b) {
  if (a.lin.n() != b.lin.n()) throw std::invalid_argument("same_chamber: mark counts differ");
  ChamberSignature sa = chamber_signature(a);
  ChamberSignature sb = chamber_signature(b);
  if (sa.on_wall() || sb.on_wall()) return false;
  return sa == sb;
}

// A wall crossed by the straight segment (1-t)*from + t*to, at interior time t.
struct WallCrossing {
  Rational t;              // in (0, 1)
  std::uint32_t mask = 0;
  std::vector<int> marks;  // 1-based, ascending
  Rational level;          // normalized level of the crossed wall
  Regime regime;           // regime at the crossing point

  friend bool operator==(const WallCrossing& a, const WallCrossing& b) {
    return a.t == b.t && a.mask == b.mask && a.level == b.level;
  }
};

// Every wall crossing along the open segment between two rays in the cone.
// Wall loci are scale invariant, so the segment may mix representatives of
// different normalizations. Results are sorted by (t, level, mask).
inline std::vector<WallCrossing> segment_crossings(const Linearization& from,
                                                   const Linearization& to) {
  if (from.n() != to.n()) throw std::invalid_argument("segment_crossings: mark counts differ");
  from.require_in_cone();
  to.require_in_cone();
  std::size_t n = from.n();
  detail::require_subset_range(n, "segment_crossings");

  std::vector<Rational> sums_from = detail::subset_sums(from.c);
  std::vector<Rational> sums_to = detail::subset_sums(to.c);
  Rational total_from = from.total_point_weight();
  Rational total_to = to.total_point_weight();

  // Values along the segment are affine in t; each locus is a linear solve.
  auto at = [](const Rational& a, const Rational& b, const Rational& t) {
    return a + (b - a) * t;
  };
  auto regime_at = [&](const Rational& t) {
    Rational gamma = at(from.gamma, to.gamma, t);
    Rational total = at(total_from, total_to, t);
    return gamma <= total / 2 ? Regime::LowGamma : Regime::HighGamma;
  };

  std::uint32_t full = (std::uint32_t(1) << n) - 1;
  std::vector<WallCrossing> crossings;
  // Scale-invariant wall equations: value(t) = 0 with
  //   level 1, LowGamma:  3 c_I = c + gamma
  //   level 2, LowGamma:  3 c_I = 2 (c + gamma)
  //   level 1, HighGamma: 2 c_I = c
  struct Family {
    Rational level;
    bool high;
  };
  const Family families[] = {{Rational(1), false}, {Rational(2), false}, {Rational(1), true}};
  for (const Family& fam : families) {
    for (std::uint32_t mask = 1; mask < full; ++mask) {
      Rational v0, v1;
      if (fam.high) {
        v0 = 2 * sums_from[mask] - total_from;
        v1 = 2 * sums_to[mask] - total_to;
      } else {
        v0 = 3 * sums_from[mask] - fam.level * (total_from + from.gamma);
        v1 = 3 * sums_to[mask] - fam.level * (total_to + to.gamma);
      }
      if (v0 == v1) continue;  // constant along the segment: no transversal crossing
      Rational t = v0 / (v0 - v1);
      if (t <= 0 || t >= 1) continue;
      Regime regime = regime_at(t);
      if (fam.high != (regime == Regime::HighGamma)) continue;
      WallCrossing cross{t, mask, detail::marks_of_mask(mask, n), fam.level, regime};
      if (std::find(crossings.begin(), crossings.end(), cross) == crossings.end())
        crossings.push_back(std::move(cross));
    }
  }
  std::sort(crossings.begin(), crossings.end(), [](const WallCrossing& a, const WallCrossing& b) {
    return std::tie(a.t, a.level, a.mask) < std::tie(b.t, b.level, b.mask);
  });
  return crossings;
}

namespace detail {

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return Integer(0);
  Integer r(1);
  for (std::size_t i = 0; i < k; ++i) {
    r *= Integer(n - i);
    r /= Integer(i + 1);
  }
  return r;
}

}  // namespace detail

// Vertices of the slice { x in [0,1]^n : sum x = k }. Integer k in [0, n]
// gives the 0/1 vectors with k ones; fractional k in (0, n) gives floor(k)
// ones plus a single coordinate k - floor(k). Listed in ascending mask order.
inline std::vector<std::vector<Rational>> hypersimplex_vertices(const Rational& k, std::size_t n) {
  detail::require_subset_range(n, "hypersimplex_vertices");
  if (k < 0 || k > Rational(static_cast<long>(n)) ||
      (den(k) != 1 && (k <= 0 || k >= Rational(static_cast<long>(n)))))
    throw std::invalid_argument("hypersimplex_vertices: k out of range for the slice");
  std::vector<std::vector<Rational>> vertices;
  std::uint32_t limit = std::uint32_t(1) << n;
  if (den(k) == 1) {
    auto ones = static_cast<std::size_t>(num(k));
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != ones) continue;
      std::vector<Rational> v(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint32_t(1) << i)) v[i] = 1;
      vertices.push_back(std::move(v));
    }
  } else {
    Rational floor_k(num(k) / den(k));  // floor for positive rationals
    auto ones = static_cast<std::size_t>(num(floor_k));
    Rational frac = k - floor_k;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != ones) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::uint32_t(1) << j)) continue;
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::uint32_t(1) << i)) v[i] = 1;
        v[j] = frac;
        vertices.push_back(std::move(v));
      }
    }
  }
  return vertices;
}

// The normalized effective region in (gamma, c_1..c_n) is the slice
// { sum = 3, all coordinates in [0,1] } on n+1 coordinates, so its vertex
// count is binomial(n+1, 3).
inline Integer delta3_vertex_count(std::size_t n) { return detail::binomial(n + 1, 3); }

// The same region assembled from its two gamma-extreme faces: gamma = 0
// (three unit point weights) and gamma = 1 (two unit point weights).
struct Delta3Assembly {
  std::vector<Linearization> gamma0_face;
  std::vector<Linearization> gamma1_face;
};

inline Delta3Assembly delta3_assembly(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("delta3_assembly: need at least three marks for the gamma = 0 face");
  detail::require_subset_range(n, "delta3_assembly");
  Delta3Assembly out;
  for (const auto& v : hypersimplex_vertices(Rational(3), n))
    out.gamma0_face.emplace_back(Rational(0), v);
  for (const auto& v : hypersimplex_vertices(Rational(2), n))
    out.gamma1_face.emplace_back(Rational(1), v);
  return out;
}

// Nudge a linearization off every wall through it: raise gamma by eps, lower
// every point weight by eps, renormalize. Fails if the shifted point is not
// strictly inside the cone or if some wall still passes through the result.
inline NormalizedLinearization perturb(const Linearization& lin, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("perturb: eps must be positive");
  std::vector<Rational> c;
  c.reserve(lin.c.size());
  for (const auto& w : lin.c) {
    if (w <= eps)
      throw std::invalid_argument("perturb: eps must be smaller than every point weight");
    c.push_back(w - eps);
  }
  NormalizedLinearization out = normalize(Linearization(lin.gamma + eps, std::move(c)));
  if (!walls_at(out).empty())
    throw std::runtime_error("perturb: result still lies on a wall; choose a different eps");
  return out;
}

}  // namespace conicstab
