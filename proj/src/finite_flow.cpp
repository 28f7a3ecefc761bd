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
#include "tessella/finite/flow.hpp"

#include "tessella/error.hpp"

#include <algorithm>
#include <queue>

namespace tessella::finite {

BoundedFlow::BoundedFlow(std::size_t nodes) : graph_(nodes) {}

std::size_t BoundedFlow::add_node() {
  graph_.emplace_back();
  return graph_.size() - 1;
}

std::size_t BoundedFlow::add_arc(std::size_t from, std::size_t to, Capacity cap) {
  graph_[from].push_back({to, graph_[to].size(), cap});
  graph_[to].push_back({from, graph_[from].size() - 1, 0});
  return graph_[from].size() - 1;
}

std::size_t BoundedFlow::add_edge(std::size_t from, std::size_t to, Capacity lower,
                                  Capacity upper) {
  TESSELLA_REQUIRE(0 <= lower && lower <= upper, ErrorCode::InvalidInput,
                   "flow bounds must satisfy 0 <= lower <= upper");
  edges_.push_back({from, add_arc(from, to, upper - lower), lower, upper});
  return edges_.size() - 1;
}

BoundedFlow::Capacity BoundedFlow::flow(std::size_t edge) const {
  const Bounded& e = edges_.at(edge);
  return e.lower + (e.upper - e.lower - graph_[e.from][e.arc].cap);
}

bool BoundedFlow::bfs(std::size_t s, std::size_t t) {
  level_.assign(graph_.size(), -1);
  std::queue<std::size_t> queue;
  level_[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : graph_[v])
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
  }
  return level_[t] >= 0;
}

BoundedFlow::Capacity BoundedFlow::dfs(std::size_t v, std::size_t t, Capacity pushed) {
  if (v == t) return pushed;
  for (std::size_t& i = next_[v]; i < graph_[v].size(); ++i) {
    Arc& a = graph_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    const Capacity got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      graph_[a.to][a.rev].cap += got;
      return got;
    }
  }
  return 0;
}

BoundedFlow::Capacity BoundedFlow::max_flow(std::size_t s, std::size_t t) {
  Capacity total = 0;
  while (bfs(s, t)) {
    next_.assign(graph_.size(), 0);
    while (Capacity f = dfs(s, t, kUnbounded)) total += f;
  }
  return total;
}

bool BoundedFlow::solve(std::size_t source, std::size_t sink) {
  // Lower bounds become node excesses; a return arc sink -> source turns the
  // s-t flow into a circulation that a super source/sink pair must saturate.
  std::vector<Capacity> excess(graph_.size(), 0);
  for (const Bounded& e : edges_) {
    excess[e.from] -= e.lower;
    excess[graph_[e.from][e.arc].to] += e.lower;
  }
  const std::size_t super_source = add_node();
  const std::size_t super_sink = add_node();
  excess.resize(graph_.size(), 0);
  add_arc(sink, source, kUnbounded);
  Capacity required = 0;
  for (std::size_t v = 0; v < super_source; ++v) {
    if (excess[v] > 0) {
      add_arc(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      add_arc(v, super_sink, -excess[v]);
    }
  }
  return max_flow(super_source, super_sink) == required;
}

}  // namespace tessella::finite
