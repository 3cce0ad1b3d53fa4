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

#ifndef NSQA_PIPELINE_DATASET_H_
#define NSQA_PIPELINE_DATASET_H_

#include <optional>
#include <string>
#include <vector>

#include "nsqa/common.h"

namespace nsqa::pipeline {

class DatasetError : public Error {
 public:
  using Error::Error;
};

// One JSON-Lines record:
//   {"id": "q1", "text": "...", "amr": "(s / star-01 ...)",
//    "gold_answers": ["dbr:Benicio_del_Toro"], "gold_sparql": "..."}
// Ask answers are "true" / "false"; count answers are decimal strings.
struct QuestionRecord {
  std::string id;
  std::string text;
  std::string amr;
  std::optional<std::vector<std::string>> gold_answers;
  std::optional<std::string> gold_sparql;
};

QuestionRecord parse_record(const std::string &json_text);
std::vector<QuestionRecord> parse_dataset(const std::string &jsonl_text);
std::vector<QuestionRecord> load_dataset(const std::string &path);

// Resolves a --question argument: a JSON record, a file holding a record,
// a .jsonl file (first record, or the one named `id`), or bare PENMAN.
QuestionRecord resolve_question(const std::string &arg, const std::optional<std::string> &id);

}  // namespace nsqa::pipeline

#endif  // NSQA_PIPELINE_DATASET_H_
