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

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "conicstab/conic_param.hpp"
#include "conicstab/projective.hpp"
#include "conicstab/rational.hpp"

using namespace conicstab;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("7/10") == Rational(7, 10));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("42") == Rational(42));
  CHECK(parse_rational("+5/1") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
  CHECK(format_rational(Rational(-4, 6)) == "-2/3");
  CHECK(format_rational(Rational(8, 4)) == "2");
  CHECK(parse_rational(format_rational(Rational(-355, 113))) == Rational(-355, 113));
}

TEST_CASE("projective point canonicalization") {
  CHECK(ProjPoint(2, -4, 6) == ProjPoint(1, -2, 3));
  CHECK(ProjPoint(-2, 4, -6) == ProjPoint(1, -2, 3));
  CHECK(ProjPoint(0, 0, -5) == ProjPoint(0, 0, 1));
  CHECK_THROWS_AS(ProjPoint(0, 0, 0), std::invalid_argument);
  CHECK(ProjPoint::from_rationals(Rational(1, 2), Rational(1, 3), Rational(0)) == ProjPoint(3, 2, 0));

  // gcd 1 and first nonzero entry positive, over a deterministic sample
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        ProjPoint p(a, b, c);
        Integer g = boost::multiprecision::gcd(
            boost::multiprecision::gcd(abs(p.v[0]), abs(p.v[1])), abs(p.v[2]));
        CHECK(g == 1);
        for (const auto& e : p.v)
          if (e != 0) {
            CHECK(e > 0);
            break;
          }
        ProjPoint q(2 * a, 2 * b, 2 * c);
        CHECK(p == q);
      }
}

TEST_CASE("join, meet, incidence") {
  ProjPoint p(1, 0, 0), q(0, 1, 0);
  ProjLine l = join(p, q);
  CHECK(l == ProjLine(0, 0, 1));
  CHECK(incident(l, p));
  CHECK(incident(l, q));
  CHECK(!incident(l, ProjPoint(0, 0, 1)));
  CHECK(meet(ProjLine(1, 0, 0), ProjLine(0, 1, 0)) == ProjPoint(0, 0, 1));
  CHECK_THROWS_AS(join(p, p), std::invalid_argument);
  CHECK(collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0)));
  CHECK(!collinear(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)));
}

TEST_CASE("conic classification by Gram rank") {
  ConicForm xy(0, 1, 0, 0, 0, 0);
  auto cls = classify_conic(xy);
  REQUIRE(cls.kind == ConicKind::Nodal);
  CHECK(*cls.node == ProjPoint(0, 0, 1));

  ConicForm x2(1, 0, 0, 0, 0, 0);
  CHECK(classify_conic(x2).kind == ConicKind::DoubleLine);
  CHECK(support_line(x2) == ProjLine(1, 0, 0));

  ConicForm doubled_line(1, 2, 0, 1, 0, 0);  // (x+y)^2
  CHECK(classify_conic(doubled_line).kind == ConicKind::DoubleLine);
  CHECK(support_line(doubled_line) == ProjLine(1, 1, 0));

  ConicForm ver(0, 0, -1, 1, 0, 0);  // y^2 - xz
  CHECK(classify_conic(ver).kind == ConicKind::NonSingular);

  // Two lines that are individually irrational still classify as nodal.
  ConicForm sum_squares(1, 0, 0, 1, 0, 0);  // x^2 + y^2
  auto irr = classify_conic(sum_squares);
  REQUIRE(irr.kind == ConicKind::Nodal);
  CHECK(*irr.node == ProjPoint(0, 0, 1));
}

TEST_CASE("tangents and singular points") {
  ConicForm ver(0, 0, -1, 1, 0, 0);
  CHECK(tangent_line(ver, ProjPoint(1, 0, 0)) == ProjLine(0, 0, 1));
  CHECK(tangent_line(ver, ProjPoint(0, 0, 1)) == ProjLine(1, 0, 0));
  CHECK_THROWS_AS(tangent_line(ver, ProjPoint(1, 1, 0)), std::invalid_argument);

  ConicForm xy(0, 1, 0, 0, 0, 0);
  CHECK(is_singular_point_of(xy, ProjPoint(0, 0, 1)));
  CHECK(!is_singular_point_of(xy, ProjPoint(0, 1, 0)));
  // At a smooth point of a nodal conic the tangent is the component itself.
  CHECK(tangent_line(xy, ProjPoint(0, 1, 3)) == ProjLine(1, 0, 0));
}

TEST_CASE("same_component via node collinearity") {
  ConicForm xy(0, 1, 0, 0, 0, 0);
  auto cls = classify_conic(xy);
  CHECK(!same_component(xy, cls, ProjPoint(0, 1, 0), ProjPoint(1, 0, 1)));
  CHECK(same_component(xy, cls, ProjPoint(0, 1, 0), ProjPoint(0, 1, 1)));
  CHECK(same_component(xy, cls, ProjPoint(0, 0, 1), ProjPoint(1, 0, 1)));  // node joins both
  CHECK_THROWS_AS(same_component(xy, cls, ProjPoint(1, 1, 1), ProjPoint(0, 1, 0)),
                  std::invalid_argument);

  ConicForm ver(0, 0, -1, 1, 0, 0);
  CHECK(same_component(ver, classify_conic(ver), ProjPoint(1, 0, 0), ProjPoint(1, 1, 1)));
}

TEST_CASE("pointed conic enforces incidence") {
  ConicForm xy(0, 1, 0, 0, 0, 0);
  CHECK_NOTHROW(PointedConic(xy, {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)}));
  CHECK_THROWS_AS(PointedConic(xy, {ProjPoint(1, 1, 1)}), std::invalid_argument);
}

TEST_CASE("motions preserve incidence and classification") {
  ConicForm ver(0, 0, -1, 1, 0, 0);
  PointedConic config(ver, {ProjPoint(1, 0, 0), ProjPoint(1, 1, 1), ProjPoint(1, -1, 1)});

  Mat3 g;
  g.row = {Vec3{Integer(2), Integer(1), Integer(0)}, Vec3{Integer(-1), Integer(1), Integer(3)},
           Vec3{Integer(0), Integer(2), Integer(1)}};
  REQUIRE(det(g) != 0);

  PointedConic moved = apply_motion(config, g);
  CHECK(classify_conic(moved.form).kind == ConicKind::NonSingular);
  for (const auto& p : moved.points) CHECK(moved.form.evaluate(p) == 0);

  // Nodal type and node transport
  ConicForm xy(0, 1, 0, 0, 0, 0);
  PointedConic nodal(xy, {ProjPoint(0, 1, 0), ProjPoint(1, 0, 0)});
  PointedConic moved_nodal = apply_motion(nodal, g);
  auto cls = classify_conic(moved_nodal.form);
  REQUIRE(cls.kind == ConicKind::Nodal);
  CHECK(*cls.node == ProjPoint(mat_vec(g, Vec3{Integer(0), Integer(0), Integer(1)})));

  // Identity motion is the identity
  PointedConic same = apply_motion(config, Mat3::identity());
  CHECK(same.form == config.form);
  CHECK(same.points == config.points);
}

TEST_CASE("adjugate identity") {
  Mat3 g;
  g.row = {Vec3{Integer(3), Integer(-1), Integer(2)}, Vec3{Integer(0), Integer(4), Integer(1)},
           Vec3{Integer(5), Integer(2), Integer(-2)}};
  Mat3 prod = mat_mul(adjugate(g), g);
  Integer d = det(g);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod.row[i][j] == (i == j ? d : Integer(0)));
}

TEST_CASE("conic parametrization through a base point") {
  ConicForm ver(0, 0, -1, 1, 0, 0);  // y^2 - xz
  ConicParametrization par(ver, ProjPoint(1, 0, 0));

  // Frozen by solving the residual intersection by hand: t -> (1 : t : t^2).
  CHECK(par.at(P1Point(2)) == ProjPoint(1, 2, 4));
  CHECK(par.at(P1Point(Rational(1, 3))) == ProjPoint(9, 3, 1));
  CHECK(par.at(P1Point(0)) == ProjPoint(1, 0, 0));
  CHECK(par.at(P1Point::infinity()) == ProjPoint(0, 0, 1));

  CHECK(par.param_of(ProjPoint(1, 2, 4)) == P1Point(2));
  // The base maps back to the tangent-direction parameter.
  CHECK(par.param_of(ProjPoint(1, 0, 0)) == P1Point(0));
  CHECK_THROWS_AS(par.param_of(ProjPoint(1, 1, 0)), std::invalid_argument);

  CHECK_THROWS_AS(ConicParametrization(ConicForm(0, 1, 0, 0, 0, 0), ProjPoint(1, 0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConicParametrization(ver, ProjPoint(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("parametrization round trip on transported conics") {
  ConicForm ver(0, 0, -1, 1, 0, 0);
  Mat3 g;
  g.row = {Vec3{Integer(1), Integer(2), Integer(-1)}, Vec3{Integer(0), Integer(1), Integer(4)},
           Vec3{Integer(3), Integer(0), Integer(1)}};
  REQUIRE(det(g) != 0);
  PointedConic base_config(ver, {ProjPoint(1, 5, 25)});
  PointedConic moved = apply_motion(base_config, g);
  ConicParametrization par(moved.form, moved.points[0]);

  long nums[] = {0, 1, -1, 2, -2, 3, -3, 5, 7, -7, 10, 11, -13, 17, 19, -19, 23, 29, -31, 37};
  long dens[] = {1, 1, 2, 3, 1, 2, 5, 3, 4, 2, 7, 3, 5, 6, 4, 9, 8, 5, 7, 11};
  for (int i = 0; i < 20; ++i) {
    P1Point t(Integer(nums[i]), Integer(dens[i]));
    ProjPoint q = par.at(t);
    CHECK(moved.form.evaluate(q) == 0);
    CHECK(par.param_of(q) == t);
  }
  CHECK(par.param_of(par.at(P1Point::infinity())) == P1Point::infinity());
}

TEST_CASE("P1 points and the three-anchor chart") {
  CHECK(P1Point(Integer(2), Integer(-4)) == P1Point(Rational(-1, 2)));
  CHECK(P1Point(Integer(-3), Integer(0)) == P1Point::infinity());
  CHECK_THROWS_AS(P1Point(Integer(0), Integer(0)), std::invalid_argument);

  P1Point zero(0), one(1), inf = P1Point::infinity();
  CHECK(moebius_chart(zero, zero, one, inf) == zero);
  CHECK(moebius_chart(one, zero, one, inf) == one);
  CHECK(moebius_chart(inf, zero, one, inf) == inf);
  // z -> (z - a)(b - c) / ((z - c)(b - a)) with a=1, b=3, c=inf: z -> (z-1)/2
  CHECK(moebius_chart(P1Point(5), P1Point(1), P1Point(3), inf) == P1Point(2));
  CHECK_THROWS_AS(moebius_chart(zero, one, one, inf), std::invalid_argument);
}

TEST_CASE("splitting a rank-2 form into rational lines") {
  SECTION("the coordinate-line pair") {
    ConicForm xy(0, 1, 0, 0, 0, 0);
    ProjPoint node = *classify_conic(xy).node;
    auto lines = rational_component_lines(xy, node);
    REQUIRE(lines.has_value());
    CHECK(lines->first != lines->second);
    for (const ProjLine& l : {lines->first, lines->second}) {
      CHECK(incident(l, node));
      // Every point of each returned line satisfies the form.
      auto [w0, w1] = line_span(l);
      CHECK(xy.evaluate(w0) == 0);
      CHECK(xy.evaluate(w1) == 0);
    }
  }

  SECTION("a transported pair stays rational") {
    // (x+2z)(3x-y+z) expanded: 3x² - xy + 7xz - 2yz + 2z²
    ConicForm f(3, -1, 7, 0, -2, 2);
    ConicClass cls = classify_conic(f);
    REQUIRE(cls.kind == ConicKind::Nodal);
    auto lines = rational_component_lines(f, *cls.node);
    REQUIRE(lines.has_value());
    std::set<ProjLine> expect{ProjLine(Vec3{Integer(1), Integer(0), Integer(2)}),
                              ProjLine(Vec3{Integer(3), Integer(-1), Integer(1)})};
    CHECK(std::set<ProjLine>{lines->first, lines->second} == expect);
  }

  SECTION("irrational and complex pairs are declined") {
    ConicForm conj(1, 0, 0, -2, 0, 0);  // x² - 2y²: lines x = ±√2 y
    ConicClass c1 = classify_conic(conj);
    REQUIRE(c1.kind == ConicKind::Nodal);
    CHECK(!rational_component_lines(conj, *c1.node).has_value());

    ConicForm complex_pair(1, 0, 0, 1, 0, 0);  // x² + y²
    ConicClass c2 = classify_conic(complex_pair);
    REQUIRE(c2.kind == ConicKind::Nodal);
    CHECK(!rational_component_lines(complex_pair, *c2.node).has_value());
  }
}
