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

#ifndef NSQA_AMR_GRAPH_H_
#define NSQA_AMR_GRAPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nsqa/common.h"

namespace nsqa::amr {

inline constexpr std::string_view kUnknownConcept = "amr-unknown";

// A constant attached to a node, e.g. (:op1, "Spain") or (:mode, imperative).
struct Attribute {
  std::string role;
  std::string value;
  bool quoted = false;

  bool operator==(const Attribute &) const = default;
};

struct Node {
  std::string var;
  std::string concept_name;
  std::vector<Attribute> attributes;
};

// Edges are stored in canonical direction: an `:ARG1-of` written under node
// x pointing at y becomes {y, :ARG1, x} with `inverted` set, so that the
// serializer can reproduce the surface form.
struct Edge {
  std::string source;
  std::string role;
  std::string target;
  bool inverted = false;

  // The node the edge hangs from in PENMAN text.
  const std::string &surface_parent() const { return inverted ? target : source; }
  const std::string &surface_child() const { return inverted ? source : target; }
};

enum class QuestionMode { Inquisitive, Interrogative, Imperative };

std::string_view to_string(QuestionMode mode);

// True for PropBank-style frame concepts such as "produce-01" or
// "have-degree-91": anything ending in '-' followed by two digits.
bool is_frame_concept(std::string_view concept_name);

// True for numbered argument roles (:ARG0 ... :ARG9).
bool is_core_role(std::string_view role);

// Rooted, directed, acyclic concept graph of one question. Nodes keep
// document order; edges keep document order.
class Graph {
 public:
  Graph() = default;

  // Adds a node; throws nsqa::Error if `var` is already defined.
  Node &add_node(std::string var, std::string concept_name);
  // Adds an edge; both endpoints must already exist.
  void add_edge(Edge edge);
  // Removes a node together with all incident edges.
  void remove_node(const std::string &var);
  void set_root(std::string var);

  const std::string &root() const { return root_; }
  const std::vector<Node> &nodes() const { return nodes_; }
  const std::vector<Edge> &edges() const { return edges_; }
  std::vector<Edge> &mutable_edges() { return edges_; }

  bool has_node(std::string_view var) const;
  const Node *find(std::string_view var) const;
  Node *find(std::string_view var);
  // Throws nsqa::Error for unknown variables.
  const Node &node(std::string_view var) const;

  bool is_frame(std::string_view var) const { return is_frame_concept(node(var).concept_name); }

  // First attribute value with the given role on `var`, if any.
  std::optional<std::string> attribute(std::string_view var,
                                       std::string_view role) const;

  // Edges leaving / entering `var` in canonical direction, document order.
  std::vector<const Edge *> out_edges(std::string_view var) const;
  std::vector<const Edge *> in_edges(std::string_view var) const;

  // Child of `var` along the canonical `role` edge, if any.
  std::optional<std::string> child(std::string_view var, std::string_view role) const;

  // Variables whose concept is amr-unknown.
  std::vector<std::string> unknown_nodes() const;

  // A variable name not used by any node, built from `stem`.
  std::string fresh_var(std::string_view stem) const;

  bool is_acyclic() const;

  // Optional source sentence (from a "# ::snt" comment).
  std::string sentence;

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<Edge> edges_;
  std::string root_;
};

// Structural equality up to node/edge/attribute ordering. Variable names are
// part of the identity, so this is graph isomorphism under the identity map.
bool isomorphic(const Graph &a, const Graph &b);

// Inquisitive when an amr-unknown exists or no mode cue is present;
// Interrogative / Imperative from the root's :mode attribute. Imperative
// wins over Interrogative, which wins over Inquisitive.
QuestionMode detect_question_mode(const Graph &graph);

// The text of a :name subtree ("Benicio del Toro") for a named node, if any.
std::optional<std::string> name_of(const Graph &graph, std::string_view var);

}  // namespace nsqa::amr

#endif  // NSQA_AMR_GRAPH_H_
