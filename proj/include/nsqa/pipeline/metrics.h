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

#ifndef NSQA_PIPELINE_METRICS_H_
#define NSQA_PIPELINE_METRICS_H_

#include <set>
#include <string>
#include <vector>

namespace nsqa::pipeline {

struct QuestionScore {
  std::string id;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Set-based P/R/F1. Both sets empty scores 1 across the board; an empty
// side facing a non-empty one scores 0.
QuestionScore score_question(const std::string &id, const std::set<std::string> &gold,
                             const std::set<std::string> &system);

struct Metrics {
  std::vector<QuestionScore> per_question;  // sorted by id
  double macro_precision = 0;
  double macro_recall = 0;
  double macro_f1 = 0;
  // Mean per-question F1 under the empty-answer conventions above; with
  // those conventions it coincides with macro_f1.
  double macro_f1_qald = 0;
};

Metrics aggregate(std::vector<QuestionScore> scores);

}  // namespace nsqa::pipeline

#endif  // NSQA_PIPELINE_METRICS_H_
