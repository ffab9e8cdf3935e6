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
#include <utility>

#include "conicstab/projective.hpp"

namespace conicstab {

// Rational parametrization of a nonsingular conic by the pencil of lines
// through a base point on it: the parameter line is the first coordinate line
// missing the base (the "screen"), a pencil member is join(base, w(t)) with
// w(t) = v w0 + u w1 for t = (u:v), and t maps to the residual intersection of
// that member with the conic. The map is a bijection P^1 -> conic; the base
// corresponds to the tangent direction.
class ConicParametrization {
 public:
  ConicParametrization(ConicForm form, ProjPoint base)
      : form_(std::move(form)), base_(std::move(base)) {
    if (classify_conic(form_).kind != ConicKind::NonSingular)
      throw std::invalid_argument("ConicParametrization: conic is singular");
    if (form_.evaluate(base_) != 0)
      throw std::invalid_argument("ConicParametrization: base point not on the conic");
    for (int i = 0; i < 3; ++i) {
      if (base_.v[i] != 0) {
        Vec3 line{Integer(0), Integer(0), Integer(0)};
        line[i] = 1;
        screen_ = ProjLine(line);
        break;
      }
    }
    std::tie(w0_, w1_) = line_span(screen_);
    tangent_ = tangent_line(form_, base_);
  }

  const ConicForm& form() const { return form_; }
  const ProjPoint& base() const { return base_; }
  const ProjLine& screen() const { return screen_; }

  // Residual intersection of join(base, w(t)) with the conic.
  ProjPoint at(const P1Point& t) const {
    Vec3 w{t.v * w0_[0] + t.u * w1_[0], t.v * w0_[1] + t.u * w1_[1], t.v * w0_[2] + t.u * w1_[2]};
    Integer qw = form_.bilinear(w, w);          // 2 F(w)
    Integer bw = form_.bilinear(base_.v, w);    // polar pairing; zero iff w on the tangent
    Vec3 r{qw * base_.v[0] - 2 * bw * w[0], qw * base_.v[1] - 2 * bw * w[1],
           qw * base_.v[2] - 2 * bw * w[2]};
    return ProjPoint(r);
  }

  // Inverse: the pencil parameter of the line joining base to q (the tangent
  // parameter when q is the base itself).
  P1Point param_of(const ProjPoint& q) const {
    if (form_.evaluate(q) != 0)
      throw std::invalid_argument("ConicParametrization: point not on the conic");
    ProjLine l = (q == base_) ? tangent_ : join(base_, q);
    ProjPoint w = meet(l, screen_);
    // Solve w ~ a w0 + b w1 using the identity w x w1 = a (w0 x w1).
    Vec3 n = cross(w0_, w1_);
    Vec3 wa = cross(w.v, w1_);
    Vec3 wb = cross(w0_, w.v);
    for (int i = 0; i < 3; ++i)
      if (n[i] != 0) {
        Integer a = wa[i], b = wb[i];
        if (n[i] < 0) {
          a = -a;
          b = -b;
        }
        return P1Point(b, a);
      }
    throw std::logic_error("ConicParametrization: degenerate screen span");
  }

 private:
  ConicForm form_;
  ProjPoint base_;
  ProjLine screen_;
  Vec3 w0_{}, w1_{};
  ProjLine tangent_;
};

}  // namespace conicstab
