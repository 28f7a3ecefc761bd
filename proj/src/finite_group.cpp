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
#include "tessella/finite/group.hpp"

#include "tessella/error.hpp"

namespace tessella::finite {

FiniteGroup::FiniteGroup(CayleyTable table, Element identity, std::vector<std::string> labels)
    : table_(std::move(table)), identity_(identity), labels_(std::move(labels)) {
  const std::size_t n = table_.size();
  TESSELLA_REQUIRE(n > 0, ErrorCode::InvalidInput, "group must be nonempty");
  TESSELLA_REQUIRE(identity_ < n, ErrorCode::InvalidInput, "identity index out of range");
  TESSELLA_REQUIRE(labels_.empty() || labels_.size() == n, ErrorCode::InvalidInput,
                   "label count differs from group order");
  for (const auto& row : table_) {
    TESSELLA_REQUIRE(row.size() == n, ErrorCode::InvalidInput, "table is not square");
    for (Element e : row)
      TESSELLA_REQUIRE(e < n, ErrorCode::InvalidInput, "table entry out of range");
  }
  for (Element a = 0; a < n; ++a)
    TESSELLA_REQUIRE(table_[identity_][a] == a && table_[a][identity_] == a,
                     ErrorCode::InvalidInput, "identity law fails");
  inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    TESSELLA_REQUIRE(inverse_[a] < n, ErrorCode::InvalidInput,
                     "element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        TESSELLA_REQUIRE(table_[table_[a][b]][c] == table_[a][table_[b][c]],
                         ErrorCode::InvalidInput, "table is not associative");
  if (labels_.empty())
    for (Element a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, 0); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  TESSELLA_REQUIRE(n > 0, ErrorCode::InvalidInput, "cyclic group of order 0");
  CayleyTable t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs) {
  const std::size_t m = rhs.order();
  const std::size_t n = lhs.order() * m;
  CayleyTable t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      t[x][y] = lhs.mul(x / m, y / m) * m + rhs.mul(x % m, y % m);
  return FiniteGroup(std::move(t), lhs.identity() * m + rhs.identity());
}

}  // namespace tessella::finite
