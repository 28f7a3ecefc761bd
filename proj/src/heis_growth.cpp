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
#include "tessella/heisenberg/growth.hpp"

#include "tessella/error.hpp"
#include "tessella/heisenberg/group.hpp"

#include <cmath>
#include <unordered_set>

namespace tessella::heisenberg {

namespace {

using IPoint = HeisPoint<std::int64_t>;

std::uint64_t pack(const IPoint& g) {
  const auto x1 = static_cast<std::uint64_t>(g.x1 + (1 << 15)) & 0xffff;
  const auto x2 = static_cast<std::uint64_t>(g.x2 + (1 << 15)) & 0xffff;
  const auto c = static_cast<std::uint64_t>(g.c + (std::int64_t{1} << 31)) & 0xffffffff;
  return (x1 << 48) | (x2 << 32) | c;
}

}  // namespace

std::vector<std::uint64_t> discrete_ball_growth(int n_max, int bound) {
  TESSELLA_REQUIRE(n_max >= 0, ErrorCode::InvalidInput, "n_max must be nonnegative");
  TESSELLA_REQUIRE(n_max <= bound, ErrorCode::TooLarge,
                   "n_max " + std::to_string(n_max) + " exceeds the bound " +
                       std::to_string(bound));
  TESSELLA_REQUIRE(n_max < (1 << 14), ErrorCode::TooLarge, "n_max exceeds the packing range");
  const IPoint gens[] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  std::unordered_set<std::uint64_t> seen{pack(IPoint::identity())};
  std::vector<IPoint> frontier{IPoint::identity()};
  std::vector<std::uint64_t> sizes{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<IPoint> next;
    for (const IPoint& g : frontier)
      for (const IPoint& s : gens) {
        const IPoint h = g * s;
        if (seen.insert(pack(h)).second) next.push_back(h);
      }
    frontier = std::move(next);
    sizes.push_back(seen.size());
  }
  return sizes;
}

double growth_exponent(const std::vector<std::uint64_t>& sizes) {
  const int n_max = static_cast<int>(sizes.size()) - 1;
  TESSELLA_REQUIRE(n_max >= 2, ErrorCode::InvalidInput, "need at least three ball sizes");
  const int first = std::max(1, (n_max + 1) / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = first; n <= n_max; ++n) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(static_cast<double>(sizes[n]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace tessella::heisenberg
