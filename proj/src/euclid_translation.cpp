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
#include "tessella/euclid/translation.hpp"

#include "tessella/error.hpp"
#include "tessella/euclid/construct.hpp"

namespace tessella::euclid {

TranslationSystem::TranslationSystem(std::vector<TranslationComponent> components)
    : components_(std::move(components)) {
  TESSELLA_REQUIRE(!components_.empty(), ErrorCode::InvalidInput,
                   "translation system has no components");
  rank_ = components_.front().gamma.cols();
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    const std::string where = "component " + std::to_string(c);
    TESSELLA_REQUIRE(comp.gamma.cols() == rank_ && comp.lambda.cols() == rank_,
                     ErrorCode::InvalidInput, where + ": generator count differs from the rank");
    TESSELLA_REQUIRE(comp.gamma.rows() == rank_ && comp.lambda.rows() == rank_,
                     ErrorCode::InvalidInput,
                     where + ": dimension must equal the rank for the images to be lattices");
    // Both constructors validate invertibility.
    gamma_lattice(c);
    lambda_lattice(c);
  }
}

EucLattice TranslationSystem::gamma_lattice(std::size_t c) const {
  return EucLattice(components_[c].gamma);
}

EucLattice TranslationSystem::lambda_lattice(std::size_t c) const {
  return EucLattice(components_[c].lambda);
}

TranslationReport translation_ratios(const TranslationSystem& ts) {
  TranslationReport out;
  for (std::size_t c = 0; c < ts.size(); ++c)
    out.ratios.push_back(covolume(ts.gamma_lattice(c)) / covolume(ts.lambda_lattice(c)));
  out.pass = true;
  for (std::size_t c = 1; c < ts.size(); ++c)
    if (out.ratios[c] != out.ratios[0]) {
      out.pass = false;
      out.offending = std::make_pair(std::size_t{0}, c);
      break;
    }
  return out;
}

TranslationReport translation_system_check(const TranslationSystem& ts,
                                           const std::vector<FrameRegion>& x,
                                           const std::vector<FrameRegion>& y) {
  TESSELLA_REQUIRE(x.size() == ts.size() && y.size() == ts.size(), ErrorCode::InvalidInput,
                   "one X and one Y region per component are required");
  for (std::size_t c = 0; c < ts.size(); ++c) {
    TESSELLA_REQUIRE(verify_tiling_exact(x[c], ts.gamma_lattice(c)).ok, ErrorCode::InvalidDomain,
                     "X does not tile component " + std::to_string(c) + " by Gamma");
    TESSELLA_REQUIRE(verify_tiling_exact(y[c], ts.lambda_lattice(c)).ok, ErrorCode::InvalidDomain,
                     "Y does not tile component " + std::to_string(c) + " by Lambda");
  }
  return translation_ratios(ts);
}

std::vector<FrameRegion> translation_system_common_fd(const TranslationSystem& ts) {
  const auto report = translation_ratios(ts);
  for (std::size_t c = 0; c < ts.size(); ++c)
    TESSELLA_REQUIRE(report.ratios[c] == 1, ErrorCode::ConditionFails,
                     "component " + std::to_string(c) + " has covolume ratio " +
                         to_string(report.ratios[c]) + " != 1");
  std::vector<FrameRegion> out;
  for (std::size_t c = 0; c < ts.size(); ++c)
    out.push_back(common_fd_commensurable(ts.gamma_lattice(c), ts.lambda_lattice(c)));
  return out;
}

}  // namespace tessella::euclid
