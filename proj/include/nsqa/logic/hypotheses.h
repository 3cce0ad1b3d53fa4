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

#ifndef NSQA_LOGIC_HYPOTHESES_H_
#define NSQA_LOGIC_HYPOTHESES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsqa/kb/store.h"
#include "nsqa/linkers/relation.h"
#include "nsqa/logic/query.h"
#include "nsqa/logic/rules.h"

namespace nsqa::logic {

inline constexpr size_t kDefaultBeam = 4;

// Everything a hypothesis query shares besides its relation atoms.
struct QueryTemplate {
  QueryKind kind = QueryKind::Select;
  std::string target;
  std::vector<TypeAtom> type_atoms;
  std::vector<Atom> extra_atoms;  // appended after the bucket atoms
  std::optional<SortConstruct> sort;
  std::optional<CountConstruct> count;
  std::optional<FilterConstruct> filter;
  VarTypes var_types;  // for orientation
};

struct Hypothesis {
  std::vector<size_t> choice;  // candidate index per bucket
  std::vector<kb::Term> relations;
  std::vector<double> weights;
  double score = 0;
  // Score relative to the largest candidate weight, quantized; the sort key.
  int64_t rank_key = 0;
  LogicQuery query;
};

// Mean of the weights, summed smallest first so that permuted weight
// lists give bit-identical scores.
double hypothesis_score(std::vector<double> weights);

// All combinations of the top `beam` candidates per bucket, best first;
// ties are broken by the relation IRIs in bucket order. Throws
// linkers::EmptyBucketError for an empty bucket.
std::vector<Hypothesis> generate_hypotheses(const std::vector<linkers::RelationBucket> &buckets,
                                            const QueryTemplate &tmpl,
                                            const kb::KnowledgeBase &kb,
                                            size_t beam = kDefaultBeam);

}  // namespace nsqa::logic

#endif  // NSQA_LOGIC_HYPOTHESES_H_
