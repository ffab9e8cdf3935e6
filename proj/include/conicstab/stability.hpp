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
#include <optional>
#include <string>
#include <vector>

#include "conicstab/linearization.hpp"
#include "conicstab/projective.hpp"
#include "conicstab/verdict.hpp"

namespace conicstab {

// One evaluated condition lhs <= rhs with exact sides.
struct InequalityRecord {
  std::string label;
  Rational lhs, rhs;

  bool satisfied() const { return lhs <= rhs; }
  bool tight() const { return lhs == rhs; }
};

inline Verdict verdict_from(const std::vector<InequalityRecord>& records) {
  bool tight = false;
  for (const auto& r : records) {
    if (!r.satisfied()) return Verdict::Unstable;
    tight = tight || r.tight();
  }
  return tight ? Verdict::StrictlySemistable : Verdict::Stable;
}

// The four caps of the closed-form criterion, as functions of the total point
// weight and gamma.
struct StabilityBounds {
  Rational c, gamma;

  Rational smooth_point_cap() const { return (c + gamma) / 3; }
  Rational nonsingular_point_cap() const { return min_rational(smooth_point_cap(), c / 2); }
  Rational node_cap() const { return (c - 2 * gamma) / 3; }
  // Cap for one line component carrying also the marks at the node.
  Rational component_cap() const { return (2 * c - gamma) / 3; }
};

// Marks grouped by location, in order of first appearance; 1-based indices.
struct Cluster {
  ProjPoint location;
  std::vector<int> marks;
  Rational weight;
};

inline std::vector<Cluster> mark_clusters(const PointedConic& config, const Linearization& lin) {
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < config.n(); ++i) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Cluster& cl) { return cl.location == config.points[i]; });
    if (it == out.end()) {
      out.push_back({config.points[i], {static_cast<int>(i) + 1}, lin.c[i]});
    } else {
      it->marks.push_back(static_cast<int>(i) + 1);
      it->weight += lin.c[i];
    }
  }
  return out;
}

namespace detail {

inline std::string marks_label(const std::vector<int>& marks) {
  std::string s = "{";
  for (std::size_t i = 0; i < marks.size(); ++i)
    s += (i ? "," : "") + std::to_string(marks[i]);
  return s + "}";
}

}  // namespace detail

struct StabilityReport {
  Verdict verdict = Verdict::Stable;
  ConicKind kind = ConicKind::NonSingular;
  std::optional<ProjPoint> node;
  std::vector<InequalityRecord> inequalities;
  std::string note;
};

// Closed-form verdict. A double line is unstable outright. A split conic is
// semistable iff every smooth cluster stays within (c+gamma)/3, the node
// cluster within (c-2gamma)/3, and each line component, counted together with
// the marks at the node, within (2c-gamma)/3; a smooth conic is semistable iff
// every cluster stays within min((c+gamma)/3, c/2). Stable means all bounds
// strict; any bound met with equality gives strict semistability.
inline StabilityReport classify_report(const PointedConic& config, const Linearization& lin) {
  lin.require_positive();
  if (lin.n() != config.n())
    throw std::invalid_argument("classify: linearization has " + std::to_string(lin.n()) +
                                " weights for " + std::to_string(config.n()) + " points");

  StabilityReport rep;
  ConicClass cls = classify_conic(config.form);
  rep.kind = cls.kind;
  rep.node = cls.node;
  StabilityBounds bounds{lin.total_point_weight(), lin.gamma};

  if (cls.kind == ConicKind::DoubleLine) {
    rep.verdict = Verdict::Unstable;
    rep.note = "support is a double line";
    return rep;
  }

  std::vector<Cluster> clusters = mark_clusters(config, lin);

  if (cls.kind == ConicKind::NonSingular) {
    for (const auto& cl : clusters)
      rep.inequalities.push_back({"cluster " + detail::marks_label(cl.marks) + " at " +
                                      cl.location.str() + " within min((c+gamma)/3, c/2)",
                                  cl.weight, bounds.nonsingular_point_cap()});
    rep.verdict = verdict_from(rep.inequalities);
    return rep;
  }

  const ProjPoint& node = *cls.node;
  Rational node_weight(0);
  std::vector<int> node_marks;
  struct Side {
    std::optional<ProjPoint> rep_location;
    Rational weight{0};
    std::vector<int> marks;
  };
  std::array<Side, 2> sides;

  for (const auto& cl : clusters) {
    if (cl.location == node) {
      node_weight = cl.weight;
      node_marks = cl.marks;
      continue;
    }
    rep.inequalities.push_back({"smooth cluster " + detail::marks_label(cl.marks) + " at " +
                                    cl.location.str() + " within (c+gamma)/3",
                                cl.weight, bounds.smooth_point_cap()});
    Side* home = nullptr;
    for (auto& side : sides) {
      if (!side.rep_location) {
        home = &side;
        break;
      }
      if (collinear(*side.rep_location, cl.location, node)) {
        home = &side;
        break;
      }
    }
    if (home == nullptr)
      throw std::logic_error("classify: more than two components through the node");
    if (!home->rep_location) home->rep_location = cl.location;
    home->weight += cl.weight;
    home->marks.insert(home->marks.end(), cl.marks.begin(), cl.marks.end());
  }

  rep.inequalities.push_back({"node cluster " + detail::marks_label(node_marks) +
                                  " within (c-2gamma)/3",
                              node_weight, bounds.node_cap()});
  for (int s = 0; s < 2; ++s) {
    const Side& side = sides[s];
    std::string what = side.rep_location
                           ? "component through " + side.rep_location->str() + " carrying " +
                                 detail::marks_label(side.marks)
                           : "unmarked component";
    rep.inequalities.push_back({what + " plus node marks within (2c-gamma)/3",
                                side.weight + node_weight, bounds.component_cap()});
  }
  rep.verdict = verdict_from(rep.inequalities);
  return rep;
}

inline Verdict classify(const PointedConic& config, const Linearization& lin) {
  return classify_report(config, lin).verdict;
}

// Weighted points on the projective line: semistable iff no cluster exceeds
// half the total weight, stable iff strictly less everywhere.
struct P1StabilityReport {
  Verdict verdict = Verdict::Stable;
  std::vector<InequalityRecord> inequalities;
};

inline P1StabilityReport classify_sl2_report(const std::vector<P1Point>& points,
                                             const std::vector<Rational>& c) {
  if (points.size() != c.size() || points.empty())
    throw std::invalid_argument("classify_sl2: need matching nonempty points and weights");
  Rational total(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] <= 0) throw std::invalid_argument("classify_sl2: weights must be positive");
    total += c[i];
  }
  P1StabilityReport rep;
  std::vector<P1Point> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::find(seen.begin(), seen.end(), points[i]) != seen.end()) continue;
    seen.push_back(points[i]);
    Rational w(0);
    std::vector<int> marks;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == points[i]) {
        w += c[j];
        marks.push_back(static_cast<int>(j) + 1);
      }
    rep.inequalities.push_back({"cluster " + detail::marks_label(marks) + " at " +
                                    points[i].str() + " within c/2",
                                w, total / 2});
  }
  rep.verdict = verdict_from(rep.inequalities);
  return rep;
}

inline Verdict classify_sl2(const std::vector<P1Point>& points, const std::vector<Rational>& c) {
  return classify_sl2_report(points, c).verdict;
}

// The n-independent linearization family: gamma = 3 eps, two marks of weight
// 1 - eps, and the remaining n - 2 marks sharing 1 - eps equally. The total
// c + gamma is 3 identically.
inline Linearization boggi2_linearization(std::size_t n, const Rational& eps) {
  if (n < 3) throw std::invalid_argument("boggi2_linearization: needs n >= 3");
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("boggi2_linearization: eps must lie in (0, 1)");
  std::vector<Rational> c{1 - eps, 1 - eps};
  Rational tail = (1 - eps) / Rational(static_cast<long>(n) - 2);
  for (std::size_t i = 2; i < n; ++i) c.push_back(tail);
  return Linearization(3 * eps, std::move(c));
}

// Modular stability relative to a distinguished subset I of the marks: the
// I-marks avoid the singular points, every component carries at least three
// special points and at least one I-mark at a smooth point, and no I-mark
// shares its location with any other mark.
inline bool is_I_stable(const PointedConic& config, const std::vector<int>& I) {
  for (int i : I)
    if (i < 1 || static_cast<std::size_t>(i) > config.n())
      throw std::invalid_argument("is_I_stable: mark index out of range");
  auto in_I = [&](int mark) { return std::find(I.begin(), I.end(), mark) != I.end(); };

  ConicClass cls = classify_conic(config.form);
  if (cls.kind == ConicKind::DoubleLine) return false;  // every point is singular

  // Collision rule: an I-mark shares its point with no other mark.
  std::vector<ProjPoint> locations;
  for (const auto& p : config.points)
    if (std::find(locations.begin(), locations.end(), p) == locations.end()) locations.push_back(p);
  for (const auto& loc : locations) {
    int count = 0;
    bool has_I = false;
    for (std::size_t j = 0; j < config.n(); ++j)
      if (config.points[j] == loc) {
        ++count;
        has_I = has_I || in_I(static_cast<int>(j) + 1);
      }
    if (has_I && count > 1) return false;
  }

  if (cls.kind == ConicKind::NonSingular) {
    if (locations.size() < 3) return false;
    bool any_I = false;
    for (std::size_t j = 0; j < config.n(); ++j) any_I = any_I || in_I(static_cast<int>(j) + 1);
    return any_I;
  }

  const ProjPoint& node = *cls.node;
  // I-marks avoid the node.
  for (std::size_t j = 0; j < config.n(); ++j)
    if (config.points[j] == node && in_I(static_cast<int>(j) + 1)) return false;

  // Components: smooth locations split by collinearity with the node; the
  // node itself counts as one special point on each side.
  std::array<std::optional<ProjPoint>, 2> reps;
  std::array<std::size_t, 2> special_count{1, 1};
  std::array<bool, 2> has_I{false, false};
  for (const auto& loc : locations) {
    if (loc == node) continue;
    int side = -1;
    for (int s = 0; s < 2; ++s) {
      if (!reps[s]) {
        side = s;
        break;
      }
      if (collinear(*reps[s], loc, node)) {
        side = s;
        break;
      }
    }
    if (side < 0) throw std::logic_error("is_I_stable: more than two components");
    if (!reps[side]) reps[side] = loc;
    ++special_count[side];
    for (std::size_t j = 0; j < config.n(); ++j)
      if (config.points[j] == loc && in_I(static_cast<int>(j) + 1)) has_I[side] = true;
  }
  for (int s = 0; s < 2; ++s)
    if (special_count[s] < 3 || !has_I[s]) return false;
  return true;
}

// Same notion for weighted points on one projective line.
inline bool is_I_stable_p1(const std::vector<P1Point>& points, const std::vector<int>& I) {
  for (int i : I)
    if (i < 1 || static_cast<std::size_t>(i) > points.size())
      throw std::invalid_argument("is_I_stable_p1: mark index out of range");
  auto in_I = [&](int mark) { return std::find(I.begin(), I.end(), mark) != I.end(); };
  std::vector<P1Point> locations;
  for (const auto& p : points)
    if (std::find(locations.begin(), locations.end(), p) == locations.end()) locations.push_back(p);
  for (const auto& loc : locations) {
    int count = 0;
    bool has_I = false;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == loc) {
        ++count;
        has_I = has_I || in_I(static_cast<int>(j) + 1);
      }
    if (has_I && count > 1) return false;
  }
  if (locations.size() < 3) return false;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (in_I(static_cast<int>(j) + 1)) return true;
  return false;
}

}  // namespace conicstab
