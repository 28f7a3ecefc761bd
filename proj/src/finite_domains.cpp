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
#include "tessella/finite/domains.hpp"

#include "tessella/error.hpp"

#include <map>
#include <numeric>

namespace tessella::finite {

namespace {

std::vector<std::size_t> coverage(const FiniteAction& action, const std::vector<AtomSet>& family) {
  std::vector<std::size_t> count(action.space().size(), 0);
  for (const auto& set : family)
    for (const auto& p : action.permutations())
      for (Atom x : set) {
        TESSELLA_REQUIRE(x < count.size(), ErrorCode::InvalidInput, "atom index out of range");
        ++count[p[x]];
      }
  return count;
}

}  // namespace

Verdict verify_fundamental_domain(const FiniteAction& action, const AtomSet& x) {
  const auto count = coverage(action, {x});
  for (Atom a = 0; a < count.size(); ++a)
    if (count[a] != 1) return {false, CoverageWitness{a, count[a]}};
  return {true, std::nullopt};
}

Verdict verify_packing(const FiniteAction& action, const std::vector<AtomSet>& family) {
  const auto count = coverage(action, family);
  for (Atom a = 0; a < count.size(); ++a)
    if (count[a] > 1) return {false, CoverageWitness{a, count[a]}};
  return {true, std::nullopt};
}

AtomSet find_fundamental_domain(const FiniteAction& action) {
  const auto labels = action.orbit_labels();
  std::vector<std::size_t> size;
  AtomSet out;
  for (Atom x = 0; x < labels.size(); ++x) {
    if (labels[x] == size.size()) {
      size.push_back(0);
      out.push_back(x);
    }
    ++size[labels[x]];
  }
  for (std::size_t o = 0; o < size.size(); ++o)
    TESSELLA_REQUIRE(size[o] == action.group().order(), ErrorCode::NotFree,
                     "orbit of atom " + std::to_string(out[o]) + " has " +
                         std::to_string(size[o]) + " atoms but |G| = " +
                         std::to_string(action.group().order()));
  return out;
}

std::vector<AtomSet> joint_invariant_partition(const ActionPair& pair) {
  const std::size_t n = pair.space().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto* action : {&pair.left(), &pair.right()})
    for (const auto& p : action->permutations())
      for (Atom x = 0; x < n; ++x) unite(x, p[x]);
  std::map<std::size_t, AtomSet> blocks;
  for (Atom x = 0; x < n; ++x) blocks[find(x)].push_back(x);
  std::vector<AtomSet> out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

}  // namespace tessella::finite
