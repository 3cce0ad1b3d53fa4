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

#ifndef NSQA_LINKERS_ENTITY_H_
#define NSQA_LINKERS_ENTITY_H_

#include <string>
#include <string_view>
#include <vector>

#include "nsqa/amr/graph.h"
#include "nsqa/common.h"
#include "nsqa/kb/term.h"
#include "nsqa/linkers/lexicon.h"

namespace nsqa::linkers {

inline constexpr double kDefaultEntityThreshold = 0.8;

struct EntityLink {
  std::string node;  // the named node, not the name subtree
  std::string mention;
  kb::Term iri;
  double score = 0;
};

struct TypeLink {
  std::string node;
  kb::Term class_iri;
  double score = 0;
};

// Jaccard overlap of the whitespace token sets of two normalized strings.
double token_jaccard(std::string_view a, std::string_view b);

// "movies" -> "movie"; words ending in "ss"/"us"/"is" and a short
// exception list are left alone.
std::string singularize(std::string_view word);

// One link per node carrying a :name subtree whose mention matches the
// lexicon exactly or with token Jaccard >= threshold. Unmatched mentions
// are written to `trace`.
std::vector<EntityLink> link_entities(const amr::Graph &graph, const Lexicon &lexicon,
                                      double threshold = kDefaultEntityThreshold,
                                      Trace *trace = nullptr);

// Type links for plain concept nodes: not frames, not named, not
// amr-unknown. The concept is singularized before lookup.
std::vector<TypeLink> link_types(const amr::Graph &graph, const Lexicon &type_lexicon);

}  // namespace nsqa::linkers

#endif  // NSQA_LINKERS_ENTITY_H_
