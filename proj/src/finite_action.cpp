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
#include "tessella/finite/action.hpp"

#include "tessella/error.hpp"

#include <algorithm>
#include <numeric>

namespace tessella::finite {

AtomSet make_atom_set(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  for (const auto& w : weights_)
    TESSELLA_REQUIRE(w > 0, ErrorCode::InvalidInput, "atom weights must be positive");
}

FiniteMeasureSpace FiniteMeasureSpace::uniform(std::size_t atoms) {
  return FiniteMeasureSpace(std::vector<Rational>(atoms, Rational(1)));
}

Rational FiniteMeasureSpace::measure(const AtomSet& set) const {
  Rational total(0);
  for (Atom a : set) total += weights_.at(a);
  return total;
}

FiniteAction::FiniteAction(FiniteGroup group, FiniteMeasureSpace space,
                           std::vector<Permutation> perm, Side side)
    : group_(std::move(group)), space_(std::move(space)), perm_(std::move(perm)), side_(side) {
  const std::size_t n = space_.size();
  TESSELLA_REQUIRE(perm_.size() == group_.order(), ErrorCode::InvalidInput,
                   "one permutation per group element required");
  for (const auto& p : perm_) {
    TESSELLA_REQUIRE(p.size() == n, ErrorCode::InvalidInput, "permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (Atom x = 0; x < n; ++x) {
      TESSELLA_REQUIRE(p[x] < n && !seen[p[x]], ErrorCode::InvalidInput,
                       "action map is not a permutation");
      seen[p[x]] = true;
      TESSELLA_REQUIRE(space_.weight(p[x]) == space_.weight(x), ErrorCode::InvalidInput,
                       "action does not preserve atom weights");
    }
  }
  for (Atom x = 0; x < n; ++x)
    TESSELLA_REQUIRE(perm_[group_.identity()][x] == x, ErrorCode::InvalidInput,
                     "identity must act trivially");
  for (Element g = 0; g < group_.order(); ++g)
    for (Element h = 0; h < group_.order(); ++h) {
      const Permutation& gh = perm_[group_.mul(g, h)];
      for (Atom x = 0; x < n; ++x) {
        // left: (gh).x = g.(h.x); right: x.(gh) = (x.g).h
        const Atom expect = side_ == Side::Left ? perm_[g][perm_[h][x]] : perm_[h][perm_[g][x]];
        TESSELLA_REQUIRE(gh[x] == expect, ErrorCode::InvalidInput,
                         side_ == Side::Left ? "left action is not a homomorphism"
                                             : "right action is not an anti-homomorphism");
      }
    }
}

AtomSet FiniteAction::translate(Element g, const AtomSet& set) const {
  std::vector<Atom> out;
  out.reserve(set.size());
  for (Atom x : set) out.push_back(perm_[g][x]);
  return make_atom_set(std::move(out));
}

std::vector<std::size_t> FiniteAction::orbit_labels() const {
  const std::size_t n = space_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, kUnset);
  std::size_t next = 0;
  for (Atom x = 0; x < n; ++x) {
    if (label[x] != kUnset) continue;
    for (const auto& p : perm_) label[p[x]] = next;
    ++next;
  }
  return label;
}

bool FiniteAction::is_free() const {
  for (Element g = 0; g < group_.order(); ++g) {
    if (g == group_.identity()) continue;
    for (Atom x = 0; x < space_.size(); ++x)
      if (perm_[g][x] == x) return false;
  }
  return true;
}

FiniteAction FiniteAction::as_left() const {
  if (side_ == Side::Left) return *this;
  std::vector<Permutation> perm(group_.order());
  for (Element g = 0; g < group_.order(); ++g) perm[g] = perm_[group_.inverse(g)];
  return FiniteAction(group_, space_, std::move(perm), Side::Left);
}

ActionPair::ActionPair(FiniteAction left, FiniteAction right)
    : left_(std::move(left)), right_(std::move(right)) {
  TESSELLA_REQUIRE(left_.space() == right_.space(), ErrorCode::InvalidInput,
                   "actions live on different spaces");
  const auto& lp = left_.permutations();
  const auto& rp = right_.permutations();
  for (const auto& a : lp)
    for (const auto& b : rp)
      for (Atom x = 0; x < space().size(); ++x)
        TESSELLA_REQUIRE(a[b[x]] == b[a[x]], ErrorCode::InvalidInput, "actions do not commute");
}

FiniteAction cyclic_shift_action(std::size_t modulus, std::size_t step, Side side) {
  TESSELLA_REQUIRE(modulus > 0 && step > 0 && modulus % step == 0, ErrorCode::InvalidInput,
                   "step must divide the modulus");
  const std::size_t order = modulus / step;
  std::vector<Permutation> perm(order, Permutation(modulus));
  for (std::size_t g = 0; g < order; ++g)
    for (Atom x = 0; x < modulus; ++x) perm[g][x] = (x + g * step) % modulus;
  return FiniteAction(FiniteGroup::cyclic(order), FiniteMeasureSpace::uniform(modulus),
                      std::move(perm), side);
}

}  // namespace tessella::finite
