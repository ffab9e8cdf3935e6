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
//
// The randomized agreement sweep: pit the closed-form classifier against the
// exhaustive one-parameter-subgroup search over freshly drawn configurations
// and chamber-interior linearizations. Zero mismatches is the release gate;
// any disagreement is reported with a replayable description, never masked.

#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "conicstab/generate.hpp"
#include "conicstab/oracle.hpp"
#include "conicstab/stability.hpp"

namespace conicstab {

struct SelftestReport {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::size_t smooth_cases = 0;
  std::size_t split_cases = 0;
  std::size_t stable = 0;
  std::size_t strictly_semistable = 0;
  std::size_t unstable = 0;
  std::vector<std::string> mismatch_details;  // at most a handful, for replay

  bool passed() const { return mismatches == 0; }
};

// Run `cases` agreement checks seeded by `seed`. Each case draws n in 3..6, a
// configuration (nonsingular through the rational parametrization or a split
// conic with marks on both lines and optionally the node, both with collisions
// and a random change of coordinates) and a wall-free linearization with
// gamma strictly inside (0, 1), then compares the closed-form verdict with the
// frame-family search verdict.
inline SelftestReport run_selftest(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  SelftestReport report;
  for (std::size_t k = 0; k < cases; ++k) {
    std::size_t n = 3 + k % 4;
    bool smooth = rng.chance(1, 2);
    PointedConic config = smooth ? random_smooth_config(rng, n) : random_split_config(rng, n);
    Linearization lin = random_interior_linearization(rng, n);

    Verdict closed_form = classify(config, lin);
    OracleOutcome search = oracle_classify(config, lin);

    ++report.cases;
    (smooth ? report.smooth_cases : report.split_cases) += 1;
    switch (closed_form) {
      case Verdict::Stable: ++report.stable; break;
      case Verdict::StrictlySemistable: ++report.strictly_semistable; break;
      case Verdict::Unstable: ++report.unstable; break;
    }
    if (closed_form != search.verdict) {
      ++report.mismatches;
      if (report.mismatch_details.size() < 8) {
        std::ostringstream detail;
        detail << "case " << k << " (seed " << seed << ", n=" << n << ", "
               << (smooth ? "nonsingular" : "split") << "): closed-form "
               << to_string(closed_form) << " vs search " << to_string(search.verdict)
               << " with max weight " << format_rational(search.max_mu) << ", gamma "
               << format_rational(lin.gamma);
        report.mismatch_details.push_back(detail.str());
      }
    }
  }
  return report;
}

}  // namespace conicstab
