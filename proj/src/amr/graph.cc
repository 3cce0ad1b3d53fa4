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

#include "nsqa/amr/graph.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

namespace nsqa::amr {

std::string_view to_string(QuestionMode mode) {
  switch (mode) {
    case QuestionMode::Inquisitive: return "inquisitive";
    case QuestionMode::Interrogative: return "interrogative";
    case QuestionMode::Imperative: return "imperative";
  }
  return "?";
}

bool is_frame_concept(std::string_view concept_name) {
  const size_t n = concept_name.size();
  if (n < 4) return false;
  return concept_name[n - 3] == '-' &&
         std::isdigit(static_cast<unsigned char>(concept_name[n - 2])) &&
         std::isdigit(static_cast<unsigned char>(concept_name[n - 1]));
}

bool is_core_role(std::string_view role) {
  if (role.size() != 5 || role.substr(0, 4) != ":ARG") return false;
  return std::isdigit(static_cast<unsigned char>(role[4])) != 0;
}

Node &Graph::add_node(std::string var, std::string concept_name) {
  if (index_.count(var) != 0) throw Error("duplicate AMR variable: " + var);
  index_.emplace(var, nodes_.size());
  nodes_.push_back(Node{std::move(var), std::move(concept_name), {}});
  return nodes_.back();
}

void Graph::add_edge(Edge edge) {
  if (!has_node(edge.source) || !has_node(edge.target)) {
    throw Error("edge endpoint not in graph: " + edge.source + " " + edge.role +
                " " + edge.target);
  }
  edges_.push_back(std::move(edge));
}

void Graph::remove_node(const std::string &var) {
  auto it = index_.find(var);
  if (it == index_.end()) return;
  nodes_.erase(nodes_.begin() + static_cast<std::ptrdiff_t>(it->second));
  index_.clear();
  for (size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].var, i);
  std::erase_if(edges_, [&](const Edge &e) { return e.source == var || e.target == var; });
  if (root_ == var) root_.clear();
}

void Graph::set_root(std::string var) { root_ = std::move(var); }

bool Graph::has_node(std::string_view var) const {
  return index_.count(std::string(var)) != 0;
}

const Node *Graph::find(std::string_view var) const {
  auto it = index_.find(std::string(var));
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

Node *Graph::find(std::string_view var) {
  auto it = index_.find(std::string(var));
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

const Node &Graph::node(std::string_view var) const {
  const Node *n = find(var);
  if (n == nullptr) throw Error("unknown AMR variable: " + std::string(var));
  return *n;
}

std::optional<std::string> Graph::attribute(std::string_view var,
                                            std::string_view role) const {
  for (const auto &attr : node(var).attributes) {
    if (attr.role == role) return attr.value;
  }
  return std::nullopt;
}

std::vector<const Edge *> Graph::out_edges(std::string_view var) const {
  std::vector<const Edge *> out;
  for (const auto &e : edges_) {
    if (e.source == var) out.push_back(&e);
  }
  return out;
}

std::vector<const Edge *> Graph::in_edges(std::string_view var) const {
  std::vector<const Edge *> in;
  for (const auto &e : edges_) {
    if (e.target == var) in.push_back(&e);
  }
  return in;
}

std::optional<std::string> Graph::child(std::string_view var,
                                        std::string_view role) const {
  for (const auto &e : edges_) {
    if (e.source == var && e.role == role) return e.target;
  }
  return std::nullopt;
}

std::vector<std::string> Graph::unknown_nodes() const {
  std::vector<std::string> out;
  for (const auto &n : nodes_) {
    if (n.concept_name == kUnknownConcept) out.push_back(n.var);
  }
  return out;
}

std::string Graph::fresh_var(std::string_view stem) const {
  std::string candidate(stem);
  for (int i = 2; has_node(candidate); ++i) candidate = std::string(stem) + std::to_string(i);
  return candidate;
}

bool Graph::is_acyclic() const {
  // Kahn's algorithm over canonical edges.
  std::map<std::string, int> indegree;
  for (const auto &n : nodes_) indegree[n.var] = 0;
  for (const auto &e : edges_) ++indegree[e.target];
  std::vector<std::string> ready;
  for (const auto &[var, deg] : indegree) {
    if (deg == 0) ready.push_back(var);
  }
  size_t seen = 0;
  while (!ready.empty()) {
    std::string v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto &e : edges_) {
      if (e.source == v && --indegree[e.target] == 0) ready.push_back(e.target);
    }
  }
  return seen == nodes_.size();
}

bool isomorphic(const Graph &a, const Graph &b) {
  if (a.root() != b.root()) return false;
  if (a.nodes().size() != b.nodes().size()) return false;
  if (a.edges().size() != b.edges().size()) return false;

  using AttrKey = std::tuple<std::string, std::string, bool>;
  auto attr_set = [](const Node &n) {
    std::multiset<AttrKey> s;
    for (const auto &attr : n.attributes) s.emplace(attr.role, attr.value, attr.quoted);
    return s;
  };
  for (const auto &na : a.nodes()) {
    const Node *nb = b.find(na.var);
    if (nb == nullptr || nb->concept_name != na.concept_name) return false;
    if (attr_set(na) != attr_set(*nb)) return false;
  }

  using EdgeKey = std::tuple<std::string, std::string, std::string>;
  auto edge_set = [](const Graph &g) {
    std::multiset<EdgeKey> s;
    for (const auto &e : g.edges()) s.emplace(e.source, e.role, e.target);
    return s;
  };
  return edge_set(a) == edge_set(b);
}

QuestionMode detect_question_mode(const Graph &graph) {
  if (graph.root().empty()) return QuestionMode::Inquisitive;
  bool imperative = false;
  bool interrogative = false;
  for (const auto &attr : graph.node(graph.root()).attributes) {
    if (attr.role != ":mode") continue;
    if (attr.value == "imperative") imperative = true;
    if (attr.value == "interrogative") interrogative = true;
  }
  if (imperative) return QuestionMode::Imperative;
  if (interrogative) return QuestionMode::Interrogative;
  return QuestionMode::Inquisitive;
}

std::optional<std::string> name_of(const Graph &graph, std::string_view var) {
  auto name_var = graph.child(var, ":name");
  if (!name_var) return std::nullopt;
  std::vector<std::pair<int, std::string>> ops;
  for (const auto &attr : graph.node(*name_var).attributes) {
    if (attr.role.rfind(":op", 0) != 0) continue;
    int index = 0;
    try {
      index = std::stoi(attr.role.substr(3));
    } catch (const std::exception &) {
      continue;
    }
    ops.emplace_back(index, attr.value);
  }
  if (ops.empty()) return std::nullopt;
  std::stable_sort(ops.begin(), ops.end(),
                   [](const auto &l, const auto &r) { return l.first < r.first; });
  std::string text;
  for (const auto &[_, token] : ops) {
    if (!text.empty()) text += ' ';
    text += token;
  }
  return text;
}

}  // namespace nsqa::amr
