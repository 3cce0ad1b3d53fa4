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

#ifndef NSQA_PIPELINE_PIPELINE_H_
#define NSQA_PIPELINE_PIPELINE_H_

#include <optional>
#include <string>
#include <vector>

#include "nsqa/common.h"
#include "nsqa/kb/store.h"
#include "nsqa/lnn/reasoner.h"
#include "nsqa/logic/hypotheses.h"
#include "nsqa/pipeline/config.h"
#include "nsqa/pipeline/dataset.h"
#include "nsqa/pipeline/metrics.h"

namespace nsqa::pipeline {

struct PipelineResult {
  std::string id;
  logic::QueryKind kind = logic::QueryKind::Select;
  std::string sparql;  // of the chosen hypothesis
  // Prefixed IRIs / literals for Select, the count for Count,
  // true/false/unknown for Ask.
  std::vector<std::string> answers;
  lnn::AnswerSet answer_set;
  std::optional<size_t> chosen_hypothesis;
  std::vector<logic::Hypothesis> hypotheses;
  Trace trace;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

// Runs the whole chain for one question. Errors from any stage are caught
// and reported in `error` with no answers.
PipelineResult answer_question(const QuestionRecord &record, const kb::KnowledgeBase &kb,
                               const Resources &resources, const PipelineConfig &config);

// Only the query of the best hypothesis, or an empty string plus `error`.
PipelineResult build_query(const QuestionRecord &record, const kb::KnowledgeBase &kb,
                           const Resources &resources, const PipelineConfig &config);

class MissingGoldError : public DatasetError {
 public:
  explicit MissingGoldError(const std::string &id)
      : DatasetError("record " + id + " has no gold_answers"), id_(id) {}
  const std::string &id() const { return id_; }

 private:
  std::string id_;
};

struct EvaluationRun {
  std::vector<PipelineResult> results;  // sorted by id
  Metrics metrics;
};

EvaluationRun evaluate_dataset(const std::vector<QuestionRecord> &records,
                               const kb::KnowledgeBase &kb, const Resources &resources,
                               const PipelineConfig &config);

// Tab-separated per-question rows followed by "#"-prefixed macro lines.
std::string report_tsv(const EvaluationRun &run, const std::vector<QuestionRecord> &records);
// Fixed-width table for terminals.
std::string report_table(const EvaluationRun &run);

}  // namespace nsqa::pipeline

#endif  // NSQA_PIPELINE_PIPELINE_H_
