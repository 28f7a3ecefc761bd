// Copyright 2026 The Tessella Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "tessella/heisenberg/lattice.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>

namespace tessella::heisenberg {

enum class Where { Outside, Inside, Boundary };

using Chart = std::function<std::array<Rational, 3>(const Point&)>;
using ApproxChart = std::function<std::array<double, 3>(const std::array<double, 3>&)>;

/// Bounded candidate domain. `contains` is exact membership; `classify`
/// additionally flags points on the topological boundary. `approx`, when
/// set, is a floating-point chart into the unit cube used only to skip
/// translates that are far outside.
struct Candidate {
  std::function<bool(const Point&)> contains;
  std::function<Where(const Point&)> classify;
  std::array<Rational, 3> lo;  // bounding box, closed
  std::array<Rational, 3> hi;
  ApproxChart approx;
};

/// Preimage of [0,1)^3 under a chart Point -> R^3.
Candidate unit_chart_candidate(Chart chart, ApproxChart approx, const std::array<Rational, 3>& lo,
                               const std::array<Rational, 3>& hi);

Candidate malcev_cell(const HeisLattice& l);
/// prod [lo_i, hi_i) in the coordinates (x1, x2, c).
Candidate box_candidate(const std::array<Rational, 3>& lo, const std::array<Rational, 3>& hi);
/// {(x1, x2, x3 + 2 x1 x2) : x in [0,1)^3}, tested through the inverse chart.
Candidate psi_image_of_cube();

enum class ActionSide { Left, Right };

struct Window {
  std::array<Rational, 3> lo;
  std::array<Rational, 3> hi;
};

struct Histogram {
  std::map<std::uint64_t, std::uint64_t> counts;  // multiplicity -> samples
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t resampled = 0;  // draws that landed on a translate boundary

  /// Every sample covered exactly once.
  bool all_one() const;
};

struct SamplingOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Draws dyadic points from the window and counts the translates of the
/// candidate containing each; the histogram does not depend on `threads`.
/// Throws WindowTooSmall for a degenerate window.
Histogram mc_verify_tiling(const Candidate& candidate, ActionSide side, const HeisLattice& l,
                           const Window& window, const SamplingOptions& options);

/// The exp-chart image of the unit cube under the right action of H(Z).
Histogram psi_image_domain_check(const SamplingOptions& options);

/// Number of lattice elements gamma with p in gamma * Omega (left) or
/// Omega * gamma (right); nullopt when p lies on a translate's boundary.
std::optional<std::uint64_t> multiplicity_at(const Candidate& candidate, ActionSide side,
                                             const HeisLattice& l, const Point& p);

}  // namespace tessella::heisenberg
