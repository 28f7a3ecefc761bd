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

#include <cstddef>
#include <string>
#include <vector>

namespace tessella::finite {

using Element = std::size_t;
using CayleyTable = std::vector<std::vector<Element>>;

/// A finite group given by its multiplication table. The group axioms are
/// checked on construction (associativity is O(n^3), fine for the sizes this
/// library targets).
class FiniteGroup {
 public:
  FiniteGroup(CayleyTable table, Element identity, std::vector<std::string> labels = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Pairs (a, b) indexed a * |rhs| + b.
  static FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs);

  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const CayleyTable& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const FiniteGroup& other) const {
    return table_ == other.table_ && identity_ == other.identity_;
  }

 private:
  CayleyTable table_;
  Element identity_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

}  // namespace tessella::finite
