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
#include <cstdint>
#include <vector>

namespace tessella::finite {

/// Integer flow network with lower and upper capacity bounds per edge.
/// Feasibility is decided by the usual reduction to a max-flow problem from a
/// super source to a super sink, solved with Dinic's algorithm. Edges are
/// explored in insertion order, so results are deterministic.
class BoundedFlow {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kUnbounded = std::int64_t{1} << 50;

  explicit BoundedFlow(std::size_t nodes);

  std::size_t add_node();
  /// Returns an edge handle for flow() queries.
  std::size_t add_edge(std::size_t from, std::size_t to, Capacity lower, Capacity upper);

  /// Searches for an s-t flow honoring every bound. Returns false when none
  /// exists; on success flow() reports the per-edge values.
  bool solve(std::size_t source, std::size_t sink);

  Capacity flow(std::size_t edge) const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    Capacity cap;
  };
  struct Bounded {
    std::size_t from;
    std::size_t arc;
    Capacity lower;
    Capacity upper;
  };

  std::size_t add_arc(std::size_t from, std::size_t to, Capacity cap);
  Capacity max_flow(std::size_t s, std::size_t t);
  bool bfs(std::size_t s, std::size_t t);
  Capacity dfs(std::size_t v, std::size_t t, Capacity pushed);

  std::vector<std::vector<Arc>> graph_;
  std::vector<Bounded> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace tessella::finite
