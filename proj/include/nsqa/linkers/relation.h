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

// Relation linking: every collapsed triple gets a bucket of KB relations
// ranked by a weighted sum of four scorers (alignment table, an optional
// neural plugin, lexical similarity and KB connectivity).

#ifndef NSQA_LINKERS_RELATION_H_
#define NSQA_LINKERS_RELATION_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsqa/common.h"
#include "nsqa/kb/store.h"
#include "nsqa/linkers/lexicon.h"
#include "nsqa/path/triples.h"

namespace nsqa::linkers {

inline constexpr size_t kMaxCandidates = 10;

// Triple endpoint: an AMR variable, possibly resolved to a KB entity.
struct TermRef {
  std::string var;
  std::optional<kb::Term> iri;

  bool linked() const { return iri.has_value(); }
  // "dbr:Spain" or "?x".
  std::string str() const { return iri ? iri->str() : "?" + var; }
};

struct RelationCandidate {
  kb::Term relation;
  double weight = 0;
  // Individual scorer outputs, kept for traces.
  double align = 0;
  double neural = 0;
  double lexsim = 0;
  double boost = 0;
};

struct RelationBucket {
  size_t index = 0;
  TermRef subject;
  TermRef object;
  std::string label;
  std::string subject_role;  // from the collapsed triple
  std::string object_role;
  std::vector<RelationCandidate> candidates;  // weight descending, IRI ascending
};

class EmptyBucketError : public Error {
 public:
  using Error::Error;
};

struct ScoringWeights {
  double align = 0.4;
  double neural = 0.0;
  double lexsim = 0.3;
  double boost = 0.3;

  // Throws nsqa::Error unless all weights are >= 0 and sum to <= 1.
  void validate() const;
};

using SimilarityFn = std::function<double(std::string_view, std::string_view)>;
using NeuralScorer = std::function<double(const path::CollapsedTriple &, const kb::Term &)>;

struct RelationScoring {
  ScoringWeights weights;
  SimilarityFn similarity;  // defaults to trigram_dice
  NeuralScorer neural;      // empty: scores 0
  size_t max_candidates = kMaxCandidates;
};

// Dice coefficient over character trigram multisets. Strings too short to
// have a trigram score 1 when equal and 0 otherwise.
double trigram_dice(std::string_view a, std::string_view b);

// "star-01" -> "star"; other text is returned unchanged.
std::string strip_sense(std::string_view concept_name);

// Alignment probability of `relation` for the triple: the role-decorated
// key ("star-01.arg1.arg2") for single-frame labels, else the verbatim
// label, else the best single segment.
double alignment_score(const path::CollapsedTriple &triple, const kb::Term &relation,
                       const AlignmentTable &table);

// Best similarity between any label segment (sense suffix removed) and
// the lower-cased local name of `relation`.
double lexical_score(const path::CollapsedTriple &triple, const kb::Term &relation,
                     const SimilarityFn &similarity);

// 1 for candidates with a KB triple touching a linked endpoint of the
// bucket (in either position), 0 otherwise.
std::vector<double> kb_analysis_boost(const RelationBucket &bucket, const kb::KnowledgeBase &kb);

// Scores every KB relation for one triple and keeps the best ones with a
// positive score. Throws EmptyBucketError when nothing scores.
RelationBucket score_relation_candidates(const path::CollapsedTriple &triple, TermRef subject,
                                         TermRef object, const kb::KnowledgeBase &kb,
                                         const AlignmentTable &table,
                                         const RelationScoring &scoring = {}, size_t index = 0);

}  // namespace nsqa::linkers

#endif  // NSQA_LINKERS_RELATION_H_
