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
#include <stdexcept>

#include "conicstab/rational.hpp"

namespace conicstab {

// One-parameter subgroups are normalized to the two-parameter-free family
// acting on frame coordinates (e1, e2, e3) with exponents (b, -1-b, 1); every
// nontrivial subgroup of SL3 is equivalent to a member with b in [-2, -1/2].
inline const Rational& b_interval_lo() {
  static const Rational v(-2);
  return v;
}
inline const Rational& b_interval_hi() {
  static const Rational v(-1, 2);
  return v;
}

// Linear function of the subgroup parameter b.
struct LinF {
  Rational slope;
  Rational intercept;

  Rational eval(const Rational& b) const { return slope * b + intercept; }

  friend bool operator==(const LinF& f, const LinF& g) {
    return f.slope == g.slope && f.intercept == g.intercept;
  }
};

// Conic coefficient index order, matching ConicForm::a.
enum Monomial { kX2 = 0, kXY = 1, kXZ = 2, kY2 = 3, kYZ = 4, kZ2 = 5 };

inline const char* monomial_name(int m) {
  static const char* names[6] = {"x^2", "xy", "xz", "y^2", "yz", "z^2"};
  return names[m];
}

// Weight of the coefficient of x^i y^j z^k as a function of b:
// i (1 - b) + j (b + 2) - 2, i.e. slope j - i and intercept i + 2j - 2.
inline LinF monomial_weight(int m) {
  switch (m) {
    case kX2: return {Rational(-2), Rational(0)};   // -2b
    case kXY: return {Rational(0), Rational(1)};    // 1
    case kXZ: return {Rational(-1), Rational(-1)};  // -1-b
    case kY2: return {Rational(2), Rational(2)};    // 2b+2
    case kYZ: return {Rational(1), Rational(0)};    // b
    case kZ2: return {Rational(0), Rational(-2)};   // -2
  }
  throw std::invalid_argument("monomial_weight: index out of range");
}

// Weight of a marked point of weight c sitting on the given frame axis.
inline LinF coordinate_weight(int axis, const Rational& c) {
  switch (axis) {
    case 0: return {c, Rational(0)};  // b c
    case 1: return {-c, -c};          // (-1-b) c
    case 2: return {Rational(0), c};  // c
  }
  throw std::invalid_argument("coordinate_weight: axis out of range");
}

}  // namespace conicstab
