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
#include "tessella/finite/oracle.hpp"

#include "tessella/error.hpp"
#include "tessella/finite/domains.hpp"

namespace tessella::finite {

namespace {

void require_small(const ActionPair& pair, std::size_t max_atoms) {
  TESSELLA_REQUIRE(pair.space().size() <= max_atoms && max_atoms < 63, ErrorCode::TooLarge,
                   "brute force limited to " + std::to_string(max_atoms) + " atoms");
}

AtomSet from_mask(std::uint64_t mask, std::size_t n) {
  AtomSet s;
  for (Atom a = 0; a < n; ++a)
    if (mask >> a & 1U) s.push_back(a);
  return s;
}

std::vector<std::size_t> orbit_counts(const std::vector<std::size_t>& labels,
                                      const AtomSet& set) {
  std::vector<std::size_t> count(labels.size(), 0);
  for (Atom a : set) ++count[labels[a]];
  return count;
}

}  // namespace

bool brute_force_common_fd_exists(const ActionPair& pair, std::size_t max_atoms) {
  require_small(pair, max_atoms);
  const std::size_t n = pair.space().size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const AtomSet s = from_mask(mask, n);
    if (verify_fundamental_domain(pair.left(), s).ok &&
        verify_fundamental_domain(pair.right(), s).ok)
      return true;
  }
  return false;
}

bool brute_force_packing_exists(const ActionPair& pair, std::int64_t k, std::size_t max_atoms) {
  require_small(pair, max_atoms);
  const std::size_t n = pair.space().size();
  const auto right = pair.right().orbit_labels();
  std::vector<bool> is_right_orbit(n, false);
  for (auto r : right) is_right_orbit[r] = true;
  // F_1..F_k exist iff some U meets every right orbit in exactly k atoms and
  // its left translates are disjoint (U is then split one atom per orbit per F_i).
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const AtomSet u = from_mask(mask, n);
    const auto count = orbit_counts(right, u);
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      if (is_right_orbit[r] && count[r] != static_cast<std::size_t>(k)) ok = false;
    if (ok && verify_packing(pair.left(), {u}).ok) return true;
  }
  return false;
}

bool brute_force_k_epsilon_exists(const ActionPair& pair, std::int64_t k, const Rational& eps,
                                  std::size_t max_atoms) {
  require_small(pair, max_atoms);
  const std::size_t n = pair.space().size();
  const auto right = pair.right().orbit_labels();
  std::vector<bool> is_right_orbit(n, false);
  for (auto r : right) is_right_orbit[r] = true;
  const Rational target = eps * pair.space().measure(find_fundamental_domain(pair.right()));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const AtomSet u = from_mask(mask, n);
    const auto count = orbit_counts(right, u);
    bool ok = true;
    Rational extra(0);
    std::vector<bool> charged(n, false);
    for (Atom a : u) {
      const auto r = right[a];
      if (count[r] == static_cast<std::size_t>(k) + 1 && !charged[r]) {
        extra += pair.space().weight(a);
        charged[r] = true;
      }
    }
    for (std::size_t r = 0; r < n && ok; ++r)
      if (is_right_orbit[r] && count[r] != static_cast<std::size_t>(k) &&
          count[r] != static_cast<std::size_t>(k) + 1)
        ok = false;
    if (ok && extra == target && verify_fundamental_domain(pair.left(), u).ok) return true;
  }
  return false;
}

}  // namespace tessella::finite
