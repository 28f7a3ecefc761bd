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
#include "tessella/finite/domains.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

namespace tessella::fixtures {

using namespace tessella::finite;

inline FiniteGroup dihedral(std::size_t n) {
  // r^i s^e has index i + n e.
  const std::size_t order = 2 * n;
  CayleyTable t(order, std::vector<Element>(order));
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      const std::size_t i = a % n, e = a / n, j = b % n, f = b / n;
      const std::size_t rot = e == 0 ? (i + j) % n : (i + n - j) % n;
      t[a][b] = rot + n * ((e + f) % 2);
    }
  return FiniteGroup(std::move(t), 0);
}

inline std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// Left and right multiplication on a group H by cyclic subgroups of orders
/// a and b, glued over several components with random per-component
/// weights and a random atom relabeling. Both actions are free and commute.
struct FreeCommutingInstance {
  ActionPair pair;
  AtomSet x;
  AtomSet y;
};

inline std::optional<FreeCommutingInstance> random_free_commuting(std::mt19937_64& rng,
                                                                  std::size_t max_atoms) {
  std::uniform_int_distribution<std::size_t> order_dist(1, 4);
  const std::size_t a = order_dist(rng);
  const std::size_t b = order_dist(rng);
  const std::vector<FiniteGroup> zoo = {
      FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
      FiniteGroup::cyclic(4), FiniteGroup::cyclic(6), FiniteGroup::cyclic(8),
      FiniteGroup::cyclic(12), dihedral(2), dihedral(3), dihedral(4), dihedral(6),
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(6))};

  struct Component {
    const FiniteGroup* h;
    Element gen_left;
    Element gen_right;
    Rational weight;
  };
  std::vector<Component> comps;
  std::size_t total = 0;
  for (int attempt = 0; attempt < 40; ++attempt) {
    const FiniteGroup& h = zoo[std::uniform_int_distribution<std::size_t>(0, zoo.size() - 1)(rng)];
    if (total + h.order() > max_atoms) continue;
    std::vector<Element> of_a, of_b;
    for (Element e = 0; e < h.order(); ++e) {
      if (element_order(h, e) == a) of_a.push_back(e);
      if (element_order(h, e) == b) of_b.push_back(e);
    }
    if (of_a.empty() || of_b.empty()) continue;
    const Element gl = of_a[std::uniform_int_distribution<std::size_t>(0, of_a.size() - 1)(rng)];
    const Element gr = of_b[std::uniform_int_distribution<std::size_t>(0, of_b.size() - 1)(rng)];
    const Rational w(static_cast<long>(std::uniform_int_distribution<int>(1, 5)(rng)),
                     static_cast<long>(std::uniform_int_distribution<int>(1, 3)(rng)));
    comps.push_back({&h, gl, gr, w});
    total += h.order();
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
  }
  if (comps.empty()) return std::nullopt;

  std::vector<Atom> relabel(total);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);

  std::vector<Rational> weights(total);
  std::vector<Permutation> left(a, Permutation(total)), right(b, Permutation(total));
  std::size_t base = 0;
  for (const auto& c : comps) {
    const FiniteGroup& h = *c.h;
    for (Element e = 0; e < h.order(); ++e) weights[relabel[base + e]] = c.weight;
    Element pl = h.identity();
    for (std::size_t i = 0; i < a; ++i, pl = h.mul(pl, c.gen_left))
      for (Element e = 0; e < h.order(); ++e)
        left[i][relabel[base + e]] = relabel[base + h.mul(pl, e)];
    Element pr = h.identity();
    for (std::size_t j = 0; j < b; ++j, pr = h.mul(pr, c.gen_right))
      for (Element e = 0; e < h.order(); ++e)
        right[j][relabel[base + e]] = relabel[base + h.mul(e, pr)];
    base += h.order();
  }
  FiniteMeasureSpace space(weights);
  FiniteAction la(FiniteGroup::cyclic(a), space, std::move(left), Side::Left);
  FiniteAction ra(FiniteGroup::cyclic(b), space, std::move(right), Side::Right);

  auto random_transversal = [&](const FiniteAction& act) {
    const auto labels = act.orbit_labels();
    std::size_t count = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<std::vector<Atom>> orbits(count);
    for (Atom x = 0; x < labels.size(); ++x) orbits[labels[x]].push_back(x);
    std::vector<Atom> pick;
    for (const auto& o : orbits)
      pick.push_back(o[std::uniform_int_distribution<std::size_t>(0, o.size() - 1)(rng)]);
    return make_atom_set(pick);
  };
  AtomSet x = random_transversal(la);
  AtomSet y = random_transversal(ra);
  return FreeCommutingInstance{ActionPair(std::move(la), std::move(ra)), std::move(x),
                               std::move(y)};
}

}  // namespace tessella::fixtures
