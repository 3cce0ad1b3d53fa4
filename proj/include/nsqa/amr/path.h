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

#ifndef NSQA_AMR_PATH_H_
#define NSQA_AMR_PATH_H_

#include <string>
#include <vector>

#include "nsqa/amr/graph.h"

namespace nsqa::amr {

// One hop of a path. `forward` is true when the hop follows the canonical
// edge direction, false when it walks the edge backwards.
struct PathStep {
  std::string role;
  bool forward = true;
  std::string node;

  bool operator==(const PathStep &) const = default;
};

struct Path {
  std::string start;
  std::vector<PathStep> steps;

  size_t length() const { return steps.size(); }
  const std::string &end() const { return steps.empty() ? start : steps.back().node; }
  std::vector<std::string> nodes() const;

  // "z :ARG1-of s :ARG2 x" with backwards hops written PENMAN-style.
  std::string str() const;

  bool operator==(const Path &) const = default;
};

class NoPathError : public Error {
 public:
  NoPathError(std::string from, std::string to);
  const std::string &from() const { return from_; }
  const std::string &to() const { return to_; }

 private:
  std::string from_;
  std::string to_;
};

// Breadth-first search over the graph with edges walkable both ways.
// Neighbours are expanded in (role, node, forward-before-backward) order, so
// the result is the lexicographically smallest of the shortest paths under
// that step key. Throws NoPathError when `to` is unreachable.
Path shortest_path(const Graph &graph, const std::string &from, const std::string &to);

}  // namespace nsqa::amr

#endif  // NSQA_AMR_PATH_H_
