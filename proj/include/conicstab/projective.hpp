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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "conicstab/rational.hpp"

namespace conicstab {

using Vec3 = std::array<Integer, 3>;

inline Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline Integer dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

inline Integer det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

inline bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Divides out the gcd and flips signs so the first nonzero entry is positive.
inline Vec3 canonical_triple(Vec3 v, const char* what) {
  if (is_zero(v)) throw std::invalid_argument(std::string(what) + ": zero coordinate triple");
  Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(v[0]), abs(v[1])), abs(v[2]));
  for (auto& e : v) e /= g;
  for (const auto& e : v) {
    if (e != 0) {
      if (e < 0)
        for (auto& f : v) f = -f;
      break;
    }
  }
  return v;
}

// Point of the projective plane in canonical integer homogeneous coordinates:
// gcd of entries is 1 and the first nonzero entry is positive, so equality of
// canonical representatives is equality of points.
struct ProjPoint {
  Vec3 v{Integer(0), Integer(0), Integer(0)};

  ProjPoint() = default;
  explicit ProjPoint(Vec3 raw) : v(canonical_triple(std::move(raw), "ProjPoint")) {}
  ProjPoint(Integer x, Integer y, Integer z) : ProjPoint(Vec3{std::move(x), std::move(y), std::move(z)}) {}
  ProjPoint(long x, long y, long z) : ProjPoint(Vec3{Integer(x), Integer(y), Integer(z)}) {}

  static ProjPoint from_rationals(const Rational& x, const Rational& y, const Rational& z) {
    Integer d = boost::multiprecision::lcm(boost::multiprecision::lcm(den(x), den(y)), den(z));
    return ProjPoint(Vec3{num(x) * (d / den(x)), num(y) * (d / den(y)), num(z) * (d / den(z))});
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.v == b.v; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.v < b.v; }

  std::string str() const { return "(" + v[0].str() + ":" + v[1].str() + ":" + v[2].str() + ")"; }
};

// Line {ax + by + cz = 0}, same canonical representation as points (dual plane).
struct ProjLine {
  Vec3 v{Integer(0), Integer(0), Integer(0)};

  ProjLine() = default;
  explicit ProjLine(Vec3 raw) : v(canonical_triple(std::move(raw), "ProjLine")) {}
  ProjLine(long a, long b, long c) : ProjLine(Vec3{Integer(a), Integer(b), Integer(c)}) {}

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.v == b.v; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
  friend bool operator<(const ProjLine& a, const ProjLine& b) { return a.v < b.v; }

  std::string str() const { return "[" + v[0].str() + ":" + v[1].str() + ":" + v[2].str() + "]"; }
};

inline bool incident(const ProjLine& l, const ProjPoint& p) { return dot(l.v, p.v) == 0; }

inline ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  Vec3 c = cross(p.v, q.v);
  if (is_zero(c)) throw std::invalid_argument("join: points coincide");
  return ProjLine(c);
}

inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  Vec3 c = cross(l.v, m.v);
  if (is_zero(c)) throw std::invalid_argument("meet: lines coincide");
  return ProjPoint(c);
}

inline bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det3(a.v, b.v, c.v) == 0;
}

// Two independent points spanning the line, in free-coordinate order relative
// to the first nonzero coefficient (deterministic, not canonicalized).
inline std::pair<Vec3, Vec3> line_span(const ProjLine& l) {
  int pivot = -1;
  for (int i = 0; i < 3; ++i)
    if (l.v[i] != 0) {
      pivot = i;
      break;
    }
  std::array<Vec3, 2> basis;
  int slot = 0;
  for (int f = 0; f < 3; ++f) {
    if (f == pivot) continue;
    Vec3 w{Integer(0), Integer(0), Integer(0)};
    w[f] = l.v[pivot];
    w[pivot] = -l.v[f];
    basis[slot++] = w;
  }
  return {basis[0], basis[1]};
}

// Point of the projective line, canonical: gcd(u,v) = 1 and v > 0, except
// infinity which is (1:0). Built from a rational parameter t = u/v.
struct P1Point {
  Integer u{0}, v{1};

  P1Point() = default;
  P1Point(Integer uu, Integer vv) {
    if (uu == 0 && vv == 0) throw std::invalid_argument("P1Point: zero pair");
    Integer g = boost::multiprecision::gcd(abs(uu), abs(vv));
    uu /= g;
    vv /= g;
    if (vv < 0 || (vv == 0 && uu < 0)) {
      uu = -uu;
      vv = -vv;
    }
    u = std::move(uu);
    v = std::move(vv);
  }
  explicit P1Point(const Rational& t) : P1Point(num(t), den(t)) {}
  explicit P1Point(long t) : u(t), v(1) {}

  static P1Point infinity() { return P1Point(Integer(1), Integer(0)); }
  bool is_infinity() const { return v == 0; }
  Rational to_rational() const {
    if (is_infinity()) throw std::domain_error("P1Point: infinity has no rational value");
    return Rational(u, v);
  }

  friend bool operator==(const P1Point& a, const P1Point& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }
  friend bool operator<(const P1Point& a, const P1Point& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  }

  std::string str() const { return is_infinity() ? "inf" : format_rational(Rational(u, v)); }
};

// det(p q) in the homogeneous chart; zero exactly when the points coincide.
inline Integer p1_det(const P1Point& p, const P1Point& q) { return p.u * q.v - p.v * q.u; }

// The unique Moebius transformation sending (a, b, c) to (0, 1, inf), applied to z.
// Requires a, b, c pairwise distinct.
inline P1Point moebius_chart(const P1Point& z, const P1Point& a, const P1Point& b, const P1Point& c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("moebius_chart: anchors not distinct");
  return P1Point(p1_det(z, a) * p1_det(b, c), p1_det(z, c) * p1_det(b, a));
}

struct Mat3 {
  std::array<Vec3, 3> row{};  // row-major

  static Mat3 identity() {
    Mat3 m;
    m.row = {Vec3{Integer(1), Integer(0), Integer(0)}, Vec3{Integer(0), Integer(1), Integer(0)},
             Vec3{Integer(0), Integer(0), Integer(1)}};
    return m;
  }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.row[i] = {c0[i], c1[i], c2[i]};
    return m;
  }

  Vec3 column(int j) const { return {row[0][j], row[1][j], row[2][j]}; }

  friend bool operator==(const Mat3& a, const Mat3& b) { return a.row == b.row; }
};

inline Vec3 mat_vec(const Mat3& m, const Vec3& x) {
  return {dot(m.row[0], x), dot(m.row[1], x), dot(m.row[2], x)};
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.row[i][j] = dot(a.row[i], b.column(j));
  return r;
}

inline Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.row[i][j] = m.row[j][i];
  return r;
}

inline Integer det(const Mat3& m) { return det3(m.row[0], m.row[1], m.row[2]); }

// adj(m) * m = det(m) * I; substitutes for the inverse in projective formulas.
inline Mat3 adjugate(const Mat3& m) {
  auto c = [&](int i, int j) {
    int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    return m.row[i1][j1] * m.row[i2][j2] - m.row[i1][j2] * m.row[i2][j1];
  };
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.row[i][j] = c(j, i);
  return r;
}

// Plane conic a200 x^2 + a110 xy + a101 xz + a020 y^2 + a011 yz + a002 z^2 = 0,
// canonical integer coefficients (gcd 1, first nonzero positive).
struct ConicForm {
  // Coefficient order: x^2, xy, xz, y^2, yz, z^2.
  std::array<Integer, 6> a{};

  ConicForm() = default;
  explicit ConicForm(std::array<Integer, 6> raw) {
    bool all_zero = true;
    for (const auto& e : raw) all_zero = all_zero && e == 0;
    if (all_zero) throw std::invalid_argument("ConicForm: zero form");
    Integer g(0);
    for (const auto& e : raw) g = boost::multiprecision::gcd(g, abs(e));
    for (auto& e : raw) e /= g;
    for (const auto& e : raw) {
      if (e != 0) {
        if (e < 0)
          for (auto& f : raw) f = -f;
        break;
      }
    }
    a = std::move(raw);
  }
  ConicForm(long a200, long a110, long a101, long a020, long a011, long a002)
      : ConicForm(std::array<Integer, 6>{Integer(a200), Integer(a110), Integer(a101), Integer(a020),
                                         Integer(a011), Integer(a002)}) {}

  Integer evaluate(const Vec3& p) const {
    return a[0] * p[0] * p[0] + a[1] * p[0] * p[1] + a[2] * p[0] * p[2] + a[3] * p[1] * p[1] +
           a[4] * p[1] * p[2] + a[5] * p[2] * p[2];
  }
  Integer evaluate(const ProjPoint& p) const { return evaluate(p.v); }

  // Doubled Gram matrix 2A; integral, with B(p, p) = 2 * evaluate(p).
  Mat3 doubled_matrix() const {
    Mat3 m;
    m.row = {Vec3{2 * a[0], a[1], a[2]}, Vec3{a[1], 2 * a[3], a[4]}, Vec3{a[2], a[4], 2 * a[5]}};
    return m;
  }

  Integer bilinear(const Vec3& u, const Vec3& w) const { return dot(u, mat_vec(doubled_matrix(), w)); }

  friend bool operator==(const ConicForm& f, const ConicForm& g) { return f.a == g.a; }
  friend bool operator!=(const ConicForm& f, const ConicForm& g) { return !(f == g); }
};

// Extracts the six coefficients from a doubled Gram matrix (must be symmetric
// with even diagonal, which every B^T (2A) B is).
inline ConicForm form_from_doubled_matrix(const Mat3& m) {
  return ConicForm(std::array<Integer, 6>{m.row[0][0] / 2, m.row[0][1], m.row[0][2], m.row[1][1] / 2,
                                          m.row[1][2], m.row[2][2] / 2});
}

enum class ConicKind { NonSingular, Nodal, DoubleLine };

inline std::string to_string(ConicKind k) {
  switch (k) {
    case ConicKind::NonSingular: return "nonsingular";
    case ConicKind::Nodal: return "nodal";
    case ConicKind::DoubleLine: return "double_line";
  }
  return "?";
}

struct ConicClass {
  ConicKind kind = ConicKind::NonSingular;
  std::optional<ProjPoint> node;  // set exactly for Nodal
};

// Rank of the Gram matrix decides the type: 3 nonsingular, 2 two distinct
// lines, 1 a double line. For rank 2 the adjugate of 2A is nonzero and every
// nonzero column spans the kernel, i.e. the node; no factoring of the
// quadratic is needed, so line pairs that are irrational as individual lines
// are classified without field extensions.
inline ConicClass classify_conic(const ConicForm& f) {
  Mat3 m = f.doubled_matrix();
  if (det(m) != 0) return {ConicKind::NonSingular, std::nullopt};
  Mat3 ad = adjugate(m);
  for (int j = 0; j < 3; ++j) {
    Vec3 col = ad.column(j);
    if (!is_zero(col)) return {ConicKind::Nodal, ProjPoint(col)};
  }
  return {ConicKind::DoubleLine, std::nullopt};
}

// For a double line the rows of 2A are all proportional to the line.
inline ProjLine support_line(const ConicForm& f) {
  Mat3 m = f.doubled_matrix();
  for (int i = 0; i < 3; ++i)
    if (!is_zero(m.row[i])) return ProjLine(m.row[i]);
  throw std::logic_error("support_line: zero matrix");
}

// Tangent line at a smooth point of the conic (the polar line 2A p).
inline ProjLine tangent_line(const ConicForm& f, const ProjPoint& p) {
  if (f.evaluate(p) != 0) throw std::invalid_argument("tangent_line: point not on conic");
  Vec3 g = mat_vec(f.doubled_matrix(), p.v);
  if (is_zero(g)) throw std::invalid_argument("tangent_line: point is singular on the conic");
  return ProjLine(g);
}

inline bool is_singular_point_of(const ConicForm& f, const ProjPoint& p) {
  return f.evaluate(p) == 0 && is_zero(mat_vec(f.doubled_matrix(), p.v));
}

// The two lines of a rank-2 form, when each is individually rational: restrict
// the form to a coordinate line avoiding the node and look for rational roots
// of the resulting binary quadratic; each root joined to the node spans one
// component. Conjugate-irrational or complex line pairs return nothing — they
// carry no rational flags, so callers building rational frames skip them.
inline std::optional<std::pair<ProjLine, ProjLine>> rational_component_lines(const ConicForm& f,
                                                                             const ProjPoint& node) {
  int j = 0;
  while (node.v[j] == 0) ++j;
  Vec3 axis{Integer(0), Integer(0), Integer(0)};
  axis[j] = 1;
  auto [w0, w1] = line_span(ProjLine(axis));

  Integer A = f.evaluate(w1), B = f.bilinear(w0, w1), C = f.evaluate(w0);
  Integer disc = B * B - 4 * A * C;
  if (disc < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(disc);
  if (root * root != disc) return std::nullopt;

  Vec3 p, q;
  if (A != 0) {
    for (int i = 0; i < 3; ++i) {
      p[i] = 2 * A * w0[i] + (-B + root) * w1[i];
      q[i] = 2 * A * w0[i] + (-B - root) * w1[i];
    }
  } else if (B != 0) {
    p = w1;
    for (int i = 0; i < 3; ++i) q[i] = B * w0[i] - C * w1[i];
  } else {
    throw std::logic_error("rational_component_lines: chosen line passes through the node");
  }
  ProjPoint pp(p), qq(q);
  if (pp == qq) throw std::logic_error("rational_component_lines: coincident intersection points");
  return std::make_pair(join(node, pp), join(node, qq));
}

// Whether two points of the conic lie on one irreducible component. Decided by
// collinearity with the node in the nodal case; a point at the node lies on
// both components. Nonsingular and double-line conics have one component.
inline bool same_component(const ConicForm& f, const ConicClass& cls, const ProjPoint& p,
                           const ProjPoint& q) {
  if (f.evaluate(p) != 0 || f.evaluate(q) != 0)
    throw std::invalid_argument("same_component: points must lie on the conic");
  if (cls.kind != ConicKind::Nodal) return true;
  return collinear(p, q, *cls.node);
}

// Conic with an ordered tuple of marked points, all incident.
struct PointedConic {
  ConicForm form;
  std::vector<ProjPoint> points;

  PointedConic(ConicForm f, std::vector<ProjPoint> pts) : form(std::move(f)), points(std::move(pts)) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (form.evaluate(points[i]) != 0)
        throw std::invalid_argument("PointedConic: point " + std::to_string(i + 1) + " " +
                                    points[i].str() + " does not lie on the conic");
  }

  std::size_t n() const { return points.size(); }
};

// Image of the configuration under g in PGL3: points map by p -> g p, the form
// by A -> adj(g)^T A adj(g) (the inverse substitution, up to scale).
inline PointedConic apply_motion(const PointedConic& config, const Mat3& g) {
  if (det(g) == 0) throw std::invalid_argument("apply_motion: singular matrix");
  Mat3 ad = adjugate(g);
  Mat3 m = mat_mul(transpose(ad), mat_mul(config.form.doubled_matrix(), ad));
  std::vector<ProjPoint> pts;
  pts.reserve(config.points.size());
  for (const auto& p : config.points) pts.emplace_back(mat_vec(g, p.v));
  return PointedConic(form_from_doubled_matrix(m), std::move(pts));
}

}  // namespace conicstab
