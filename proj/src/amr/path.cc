// Copyright 2026 The NSQA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nsqa/amr/path.h"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

namespace nsqa::amr {

std::vector<std::string> Path::nodes() const {
  std::vector<std::string> out{start};
  for (const auto &step : steps) out.push_back(step.node);
  return out;
}

std::string Path::str() const {
  std::string out = start;
  for (const auto &step : steps) {
    out += ' ';
    out += step.role;
    if (!step.forward) out += "-of";
    out += ' ';
    out += step.node;
  }
  return out;
}

NoPathError::NoPathError(std::string from, std::string to)
    : Error("no path between " + from + " and " + to),
      from_(std::move(from)),
      to_(std::move(to)) {}

Path shortest_path(const Graph &graph, const std::string &from, const std::string &to) {
  if (!graph.has_node(from) || !graph.has_node(to)) throw NoPathError(from, to);
  if (from == to) return Path{from, {}};

  using Key = std::tuple<std::string, std::string, bool>;  // role, node, backward
  std::unordered_map<std::string, std::vector<PathStep>> adjacency;
  for (const auto &e : graph.edges()) {
    adjacency[e.source].push_back({e.role, true, e.target});
    adjacency[e.target].push_back({e.role, false, e.source});
  }
  for (auto &[_, steps] : adjacency) {
    std::sort(steps.begin(), steps.end(), [](const PathStep &a, const PathStep &b) {
      return Key{a.role, a.node, !a.forward} < Key{b.role, b.node, !b.forward};
    });
  }

  std::unordered_map<std::string, std::pair<std::string, PathStep>> parent;
  parent.emplace(from, std::pair<std::string, PathStep>{});
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const auto &step : adjacency[v]) {
      if (parent.count(step.node) != 0) continue;
      parent.emplace(step.node, std::pair{v, step});
      if (step.node == to) {
        Path path{from, {}};
        for (std::string cur = to; cur != from; cur = parent.at(cur).first) {
          path.steps.push_back(parent.at(cur).second);
        }
        std::reverse(path.steps.begin(), path.steps.end());
        return path;
      }
      queue.push_back(step.node);
    }
  }
  throw NoPathError(from, to);
}

}  // namespace nsqa::amr
