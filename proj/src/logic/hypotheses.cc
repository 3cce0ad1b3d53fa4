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

#include "nsqa/logic/hypotheses.h"

#include <algorithm>
#include <cmath>

namespace nsqa::logic {
namespace {

// Resolution of the rank key; scaling every weight by c moves the
// normalized score by a few ulps, far below one step.
constexpr double kRankResolution = 1e9;

}  // namespace

double hypothesis_score(std::vector<double> weights) {
  if (weights.empty()) return 0;
  std::sort(weights.begin(), weights.end());
  double sum = 0;
  for (double w : weights) sum += w;
  return sum / static_cast<double>(weights.size());
}

std::vector<Hypothesis> generate_hypotheses(const std::vector<linkers::RelationBucket> &buckets,
                                            const QueryTemplate &tmpl,
                                            const kb::KnowledgeBase &kb, size_t beam) {
  if (beam == 0) beam = 1;
  std::vector<size_t> width;
  double wmax = 0;
  for (const auto &b : buckets) {
    if (b.candidates.empty()) {
      throw linkers::EmptyBucketError("bucket " + std::to_string(b.index) + " ('" + b.label +
                                      "') has no candidates");
    }
    width.push_back(std::min(beam, b.candidates.size()));
    for (size_t j = 0; j < width.back(); ++j) wmax = std::max(wmax, b.candidates[j].weight);
  }

  std::vector<Hypothesis> out;
  std::vector<size_t> choice(buckets.size(), 0);
  while (true) {
    Hypothesis h;
    h.choice = choice;
    h.query.kind = tmpl.kind;
    h.query.target = tmpl.target;
    for (size_t i = 0; i < buckets.size(); ++i) {
      const auto &b = buckets[i];
      const auto &c = b.candidates[choice[i]];
      h.relations.push_back(c.relation);
      h.weights.push_back(c.weight);
      h.query.atoms.push_back(orient_atom(c.relation, b.subject, b.object, tmpl.var_types, kb));
    }
    for (const auto &a : tmpl.extra_atoms) h.query.atoms.push_back(a);
    h.query.type_atoms = tmpl.type_atoms;
    h.query.sort = tmpl.sort;
    h.query.count = tmpl.count;
    h.query.filter = tmpl.filter;
    h.score = hypothesis_score(h.weights);
    h.rank_key = wmax > 0 ? std::llround(h.score / wmax * kRankResolution) : 0;
    out.push_back(std::move(h));

    size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < width[i]) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }

  std::stable_sort(out.begin(), out.end(), [](const Hypothesis &a, const Hypothesis &b) {
    if (a.rank_key != b.rank_key) return a.rank_key > b.rank_key;
    return a.relations < b.relations;
  });
  return out;
}

}  // namespace nsqa::logic
