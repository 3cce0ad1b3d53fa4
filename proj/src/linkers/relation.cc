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

#include "nsqa/linkers/relation.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "nsqa/amr/graph.h"

namespace nsqa::linkers {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double max_probability(const std::vector<AlignmentTable::Entry> *entries, const kb::Term &relation) {
  double best = 0;
  if (entries == nullptr) return 0;
  for (const auto &e : *entries) {
    if (e.relation == relation) best = std::max(best, e.probability);
  }
  return best;
}

}  // namespace

void ScoringWeights::validate() const {
  for (double w : {align, neural, lexsim, boost}) {
    if (!(w >= 0.0)) throw Error("scoring weights must be non-negative");
  }
  if (align + neural + lexsim + boost > 1.0 + 1e-9) {
    throw Error("scoring weights must sum to at most 1");
  }
}

double trigram_dice(std::string_view a, std::string_view b) {
  if (a.size() < 3 || b.size() < 3) return a == b ? 1.0 : 0.0;
  std::map<std::string_view, int> grams;
  for (size_t i = 0; i + 3 <= a.size(); ++i) ++grams[a.substr(i, 3)];
  size_t common = 0;
  for (size_t i = 0; i + 3 <= b.size(); ++i) {
    auto it = grams.find(b.substr(i, 3));
    if (it != grams.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() - 2 + b.size() - 2);
}

std::string strip_sense(std::string_view concept_name) {
  if (amr::is_frame_concept(concept_name)) concept_name.remove_suffix(3);
  return std::string(concept_name);
}

double alignment_score(const path::CollapsedTriple &triple, const kb::Term &relation,
                       const AlignmentTable &table) {
  if (triple.segments.size() == 1 && amr::is_frame_concept(triple.segments[0]) &&
      !triple.subject_role.empty() && !triple.object_role.empty()) {
    const std::string key =
        triple.segments[0] + "." + triple.subject_role + "." + triple.object_role;
    if (const auto *entries = table.find(key)) return max_probability(entries, relation);
  }
  if (const auto *entries = table.find(triple.relation_label)) {
    return max_probability(entries, relation);
  }
  double best = 0;
  for (const auto &segment : triple.segments) {
    best = std::max(best, max_probability(table.find(segment), relation));
  }
  return best;
}

double lexical_score(const path::CollapsedTriple &triple, const kb::Term &relation,
                     const SimilarityFn &similarity) {
  const std::string name = lower(relation.local_name());
  double best = 0;
  for (const auto &segment : triple.segments) {
    const std::string lemma = strip_sense(segment);
    best = std::max(best, similarity ? similarity(lemma, name) : trigram_dice(lemma, name));
  }
  return std::clamp(best, 0.0, 1.0);
}

std::vector<double> kb_analysis_boost(const RelationBucket &bucket, const kb::KnowledgeBase &kb) {
  std::vector<double> out;
  out.reserve(bucket.candidates.size());
  for (const auto &c : bucket.candidates) {
    bool hit = false;
    for (const TermRef *end : {&bucket.subject, &bucket.object}) {
      if (!end->iri || hit) continue;
      hit = kb.count(*end->iri, c.relation, std::nullopt) > 0 ||
            kb.count(std::nullopt, c.relation, *end->iri) > 0;
    }
    out.push_back(hit ? 1.0 : 0.0);
  }
  return out;
}

RelationBucket score_relation_candidates(const path::CollapsedTriple &triple, TermRef subject,
                                         TermRef object, const kb::KnowledgeBase &kb,
                                         const AlignmentTable &table,
                                         const RelationScoring &scoring, size_t index) {
  scoring.weights.validate();
  RelationBucket bucket;
  bucket.index = index;
  bucket.subject = std::move(subject);
  bucket.object = std::move(object);
  bucket.label = triple.relation_label;
  bucket.subject_role = triple.subject_role;
  bucket.object_role = triple.object_role;

  for (const auto &relation : kb.relations()) {
    RelationCandidate c;
    c.relation = relation;
    c.align = alignment_score(triple, relation, table);
    c.neural = scoring.neural ? std::clamp(scoring.neural(triple, relation), 0.0, 1.0) : 0.0;
    c.lexsim = lexical_score(triple, relation, scoring.similarity);
    bucket.candidates.push_back(std::move(c));
  }
  const auto boosts = kb_analysis_boost(bucket, kb);
  const ScoringWeights &w = scoring.weights;
  for (size_t i = 0; i < bucket.candidates.size(); ++i) {
    auto &c = bucket.candidates[i];
    c.boost = boosts[i];
    c.weight = w.align * c.align + w.neural * c.neural + w.lexsim * c.lexsim + w.boost * c.boost;
  }
  std::erase_if(bucket.candidates, [](const auto &c) { return !(c.weight > 0.0); });
  if (bucket.candidates.empty()) {
    throw EmptyBucketError("no relation candidate for '" + triple.relation_label + "'");
  }
  std::sort(bucket.candidates.begin(), bucket.candidates.end(), [](const auto &a, const auto &b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.relation < b.relation;
  });
  if (bucket.candidates.size() > scoring.max_candidates) {
    bucket.candidates.resize(scoring.max_candidates);
  }
  return bucket;
}

}  // namespace nsqa::linkers
