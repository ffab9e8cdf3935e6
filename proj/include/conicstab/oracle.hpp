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

#include <cstddef>

#include "conicstab/frames.hpp"
#include "conicstab/mu.hpp"
#include "conicstab/verdict.hpp"

namespace conicstab {

struct OracleOutcome {
  Verdict verdict = Verdict::Stable;
  Rational max_mu;          // over the whole frame family
  Rational argmax_b;        // leftmost maximizer within the witness frame
  Mat3 witness_frame;       // first frame attaining max_mu
  std::size_t frames_checked = 0;
};

// Numerical-criterion verdict by direct search: maximize the weight over the
// adapted frame family and read the sign. Positive somewhere means unstable,
// zero at the peak strictly semistable, everywhere negative stable. The full
// family is always scanned so the reported maximum is deterministic.
inline OracleOutcome oracle_classify(const PointedConic& config, const Linearization& lin) {
  lin.require_positive();
  OracleOutcome out;
  bool first = true;
  for (const Mat3& frame : adapted_frames(config)) {
    auto [mx, arg] = mu_max(weight_system(config, lin, frame));
    ++out.frames_checked;
    if (first || mx > out.max_mu) {
      out.max_mu = std::move(mx);
      out.argmax_b = std::move(arg);
      out.witness_frame = frame;
      first = false;
    }
  }
  int s = sign_of(out.max_mu);
  out.verdict = s > 0 ? Verdict::Unstable
                      : (s == 0 ? Verdict::StrictlySemistable : Verdict::Stable);
  return out;
}

}  // namespace conicstab
