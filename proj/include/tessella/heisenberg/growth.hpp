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

#include <cstdint>
#include <vector>

namespace tessella::heisenberg {

inline constexpr int kDefaultGrowthBound = 30;

/// |B_n| for n = 0..n_max in the Cayley graph of H(Z) with generators
/// (+-1, 0, 0) and (0, +-1, 0). Throws TooLarge above `bound`.
std::vector<std::uint64_t> discrete_ball_growth(int n_max, int bound = kDefaultGrowthBound);

/// Least-squares slope of log |B_n| against log n over the upper half of the
/// range.
double growth_exponent(const std::vector<std::uint64_t>& sizes);

}  // namespace tessella::heisenberg
