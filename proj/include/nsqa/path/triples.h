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

// Path-based conversion of an entity-linked AMR graph into KB-shaped
// triples. Paths run from the question focus to each entity node; along a
// path, consecutive predicate elements (frame nodes and the non-argument
// roles around them) are merged into one relation label, and every other
// concept becomes a triple endpoint. Paths are merged into a single triple
// graph so a hop shared by several paths yields one triple.

#ifndef NSQA_PATH_TRIPLES_H_
#define NSQA_PATH_TRIPLES_H_

#include <string>
#include <vector>

#include "nsqa/amr/graph.h"
#include "nsqa/amr/path.h"

namespace nsqa::path {

struct CollapsedTriple {
  std::string subject;  // AMR variable on the focus side
  std::string relation_label;  // "|"-joined, e.g. "location|pay-01|instrument"
  std::string object;
  std::vector<std::string> segments;
  // Argument slot of each endpoint when the label is anchored on a frame,
  // lower-cased without the colon ("arg1"); empty otherwise.
  std::string subject_role;
  std::string object_role;
  // Index into TripleSet::paths of the path that first produced the triple.
  size_t path_index = 0;

  // "z star-01 x"
  std::string str() const { return subject + " " + relation_label + " " + object; }
};

// Result of the question-structure step: the (possibly rewritten) graph
// and the node every path starts from.
struct Focus {
  amr::Graph graph;
  std::string node;
  bool count_flag = false;  // the amr-unknown hangs off a :quant edge
  bool artificial = false;  // an amr-unknown was created for the focus
  // Entity nodes still to be reached; for two-entity yes/no questions the
  // first entity becomes the focus and is removed from this list.
  std::vector<std::string> targets;
};

struct TripleSet {
  std::vector<CollapsedTriple> triples;
  std::string focus;
  bool count_flag = false;
  bool artificial_focus = false;
  std::vector<amr::Path> paths;  // one per reached entity, pre-collapse
  amr::Graph graph;              // graph after question-structure rewriting
};

class NoFocusError : public Error {
 public:
  using Error::Error;
};

// Role text as it appears in relation labels: ":location" -> "location".
std::string role_label(std::string_view role);

// Picks the focus per question mode:
//  - imperative: the :ARG1 child of the root; the root is removed;
//  - interrogative: with two or more entities the first entity, with one an
//    artificial amr-unknown on the root frame's first free :ARGn slot;
//  - inquisitive: the amr-unknown, moved once along a :mod edge if it has
//    one; without an amr-unknown, an artificial one as above.
// Throws NoFocusError when none of these applies.
Focus preprocess_question_structure(const amr::Graph &graph, amr::QuestionMode mode,
                                    const std::vector<std::string> &entity_nodes);

// Splits one focus-to-entity path into triples.
std::vector<CollapsedTriple> collapse_path(const amr::Path &path, const amr::Graph &graph);

// Shortest path from the focus to every target, collapsed and merged.
TripleSet triples_from_focus(const Focus &focus);

// preprocess_question_structure + triples_from_focus.
TripleSet generate_triples(const amr::Graph &graph, const std::vector<std::string> &entity_nodes,
                           amr::QuestionMode mode);

}  // namespace nsqa::path

#endif  // NSQA_PATH_TRIPLES_H_
