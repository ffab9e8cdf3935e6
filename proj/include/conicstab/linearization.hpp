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
#include <vector>

#include "conicstab/rational.hpp"

namespace conicstab {

// Fractional linearization data: a weight gamma for the conic and one weight
// per marked point. The total point weight is always recomputed, never cached.
struct Linearization {
  Rational gamma;
  std::vector<Rational> c;

  Linearization(Rational g, std::vector<Rational> weights) : gamma(std::move(g)), c(std::move(weights)) {
    if (c.empty()) throw std::invalid_argument("Linearization: needs at least one marked point");
  }

  std::size_t n() const { return c.size(); }

  Rational total_point_weight() const {
    Rational s(0);
    for (const auto& w : c) s += w;
    return s;
  }

  // Stability classification requires strictly positive weights.
  void require_positive() const {
    if (gamma <= 0) throw std::invalid_argument("Linearization: gamma must be positive");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] <= 0)
        throw std::invalid_argument("Linearization: weight c_" + std::to_string(i + 1) +
                                    " must be positive");
  }

  // Polytope operations work on the closed cone: nonnegative weights with
  // positive total point weight (the ray c = 0 is excluded).
  void require_in_cone() const {
    if (gamma < 0) throw std::invalid_argument("Linearization: gamma must be nonnegative");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] < 0)
        throw std::invalid_argument("Linearization: weight c_" + std::to_string(i + 1) +
                                    " must be nonnegative");
    if (total_point_weight() == 0)
      throw std::invalid_argument("Linearization: total point weight is zero (excluded ray)");
  }
};

}  // namespace conicstab
