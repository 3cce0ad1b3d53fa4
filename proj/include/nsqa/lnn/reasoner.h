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

#ifndef NSQA_LNN_REASONER_H_
#define NSQA_LNN_REASONER_H_

#include <optional>
#include <string>
#include <vector>

#include "nsqa/common.h"
#include "nsqa/kb/store.h"
#include "nsqa/lnn/bounds.h"
#include "nsqa/lnn/network.h"
#include "nsqa/logic/query.h"

namespace nsqa::lnn {

struct HolonymRelation {
  kb::Term property;
  bool inverse = false;  // follow (y, property, x) from x to y
};

std::vector<HolonymRelation> default_holonym_relations();

struct ReasonerConfig {
  bool geographic_reasoning = true;
  std::vector<HolonymRelation> holonym_relations = default_holonym_relations();
  // Containers of these classes cannot contain each other.
  std::vector<kb::Term> exclusive_types = {kb::Term::iri("dbo:Country")};
  size_t holonym_depth = 4;
  size_t max_iterations = 100;
  // Report an undecided Ask as false.
  bool closed_world_output = false;
};

struct TypeCheck {
  bool keep = true;
  std::vector<std::string> reasons;  // "isa*(dbo:SoccerClub, dbo:Actor) = false"
};

// An atom fails when a constant argument has asserted types and none of
// them is a subclass of the declared domain (subject) or range (object).
// Variables, literals and untyped constants pass.
TypeCheck check_type_consistency(const logic::LogicQuery &query, const kb::KnowledgeBase &kb);

// Fallback for a ground atom p(s, o) the KB does not contain: looks up
// p(s, o') and walks holonym relations from each o'. Reaching o gives
// [1,1]; reaching another container sharing an exclusive class with o
// triggers the inclusion axiom, and inference yields [0,0]. Otherwise
// [0,1].
TruthBounds holonym_fallback(const logic::Atom &atom, const kb::KnowledgeBase &kb,
                             const ReasonerConfig &config, Trace *trace = nullptr);

struct AnswerSet {
  logic::QueryKind kind = logic::QueryKind::Select;
  std::vector<kb::Term> answers;  // Select; in sort order when sorted
  TruthBounds truth = TruthBounds::Unknown();  // Ask
  std::optional<size_t> count;                 // Count
  std::optional<size_t> chosen_hypothesis;
  std::vector<kb::Solution> bindings;  // global bindings of the chosen hypothesis
  Trace trace;

  // "true", "false" or "unknown" for Ask results.
  std::string verdict(bool closed_world_output = false) const;
};

class AllHypothesesDiscarded : public Error {
 public:
  using Error::Error;
};

// Runs one query through the network; no hypothesis selection.
AnswerSet evaluate_query(const logic::LogicQuery &query, const kb::KnowledgeBase &kb,
                         const ReasonerConfig &config, Trace *trace = nullptr);

// Walks the ranked hypotheses: type-invalid ones are discarded, the first
// one that yields bindings (Select, Count) or a decided truth value (Ask)
// wins. Throws AllHypothesesDiscarded when every hypothesis is discarded.
AnswerSet evaluate(const std::vector<logic::LogicQuery> &hypotheses, const kb::KnowledgeBase &kb,
                   const ReasonerConfig &config);

}  // namespace nsqa::lnn

#endif  // NSQA_LNN_REASONER_H_
