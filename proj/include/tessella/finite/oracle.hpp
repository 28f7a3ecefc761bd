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

#include "tessella/finite/action.hpp"

#include <cstdint>

namespace tessella::finite {

// Exhaustive subset enumeration. These are independent of the flow-based
// constructors and serve as ground truth in tests.

inline constexpr std::size_t kDefaultOracleBound = 16;

/// Throws TooLarge above `max_atoms`.
bool brute_force_common_fd_exists(const ActionPair& pair,
                                  std::size_t max_atoms = kDefaultOracleBound);

bool brute_force_packing_exists(const ActionPair& pair, std::int64_t k,
                                std::size_t max_atoms = kDefaultOracleBound);

/// Some left fundamental domain splits into k right fundamental domains plus
/// a right-packing remainder of measure eps * m(Y).
bool brute_force_k_epsilon_exists(const ActionPair& pair, std::int64_t k, const Rational& eps,
                                  std::size_t max_atoms = kDefaultOracleBound);

}  // namespace tessella::finite
