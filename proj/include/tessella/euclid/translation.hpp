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

#include "tessella/euclid/region.hpp"

#include <optional>
#include <utility>

namespace tessella::euclid {

/// Z^d x Z^d acting on a disjoint union of Euclidean components: generator j
/// of the first factor translates component c by gamma.col(j), of the second
/// by lambda.col(j).
struct TranslationComponent {
  RMatrix gamma;
  RMatrix lambda;
};

class TranslationSystem {
 public:
  explicit TranslationSystem(std::vector<TranslationComponent> components);

  std::size_t size() const { return components_.size(); }
  Eigen::Index rank() const { return rank_; }
  const TranslationComponent& component(std::size_t c) const { return components_[c]; }
  EucLattice gamma_lattice(std::size_t c) const;
  EucLattice lambda_lattice(std::size_t c) const;

 private:
  std::vector<TranslationComponent> components_;
  Eigen::Index rank_ = 0;
};

struct TranslationReport {
  bool pass = false;
  std::vector<Rational> ratios;  // covolume(Gamma_c) / covolume(Lambda_c)
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Ratios only; no domains involved.
TranslationReport translation_ratios(const TranslationSystem& ts);

/// Verifies that x[c] tiles component c by Gamma_c and y[c] by Lambda_c, then
/// compares the per-component covolume ratios.
TranslationReport translation_system_check(const TranslationSystem& ts,
                                           const std::vector<FrameRegion>& x,
                                           const std::vector<FrameRegion>& y);

/// Common fundamental domain per component; ConditionFails unless every ratio
/// equals 1.
std::vector<FrameRegion> translation_system_common_fd(const TranslationSystem& ts);

}  // namespace tessella::euclid
